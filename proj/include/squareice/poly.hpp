#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "squareice/numeric_types.hpp"

namespace squareice {

/// Dense univariate polynomial over a field F, coefficients indexed by degree.
/// Trailing zeros are trimmed; the zero polynomial has no degree.
template <class F>
class Poly {
public:
  Poly() = default;
  Poly(F constant) {  // NOLINT(google-explicit-constructor)
    c_.push_back(std::move(constant));
    trim();
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<F>{F(0), F(1)}); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[i];
  }
  const std::vector<F>& coeffs() const { return c_; }

  F leading() const {
    if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  F operator()(const F& x) const {
    F out(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
  }

  friend Poly operator-(const Poly& p) {
    std::vector<F> c = p.c_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<F> c(std::max(p.c_.size(), q.c_.size()), F(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<F> c(p.c_.size() + q.c_.size() - 1, F(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& p, const F& s) {
    std::vector<F> c = p.c_;
    for (auto& v : c) v = v * s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const F& s, const Poly& p) { return p * s; }
  friend Poly operator/(const Poly& p, const F& s) {
    std::vector<F> c = p.c_;
    for (auto& v : c) v = v / s;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly pow(long e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly out(F(1)), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) out *= base;
      if (e > 1) base *= base;
    }
    return out;
  }

  /// P(a*x + b).
  Poly composed_linear(const F& a, const F& b) const {
    Poly out, lin(std::vector<F>{b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + Poly(*it);
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Euclidean division; F must be a field.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& p, const Poly<F>& q) {
  if (q.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  if (p.is_zero() || *p.degree() < *q.degree()) return {Poly<F>(), p};
  const int dq = *q.degree();
  const F lead = q.coeff(dq);
  std::vector<F> rem = p.coeffs();
  std::vector<F> quo(p.coeffs().size() - dq, F(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dq; --i) {
    if (rem[i] == F(0)) continue;
    const F f = rem[i] / lead;
    quo[i - dq] = f;
    for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= f * q.coeff(j);
  }
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

/// Division known to be exact; throws if a remainder survives.
template <class F>
Poly<F> exact_div(const Poly<F>& p, const Poly<F>& q) {
  auto [quo, rem] = divmod(p, q);
  if (!rem.is_zero()) throw std::domain_error("Poly: division is not exact");
  return quo;
}

/// Dense bivariate polynomial over F; coefficient of u^i v^j at (i, j).
template <class F>
class Poly2 {
public:
  Poly2() = default;
  Poly2(F constant) {  // NOLINT(google-explicit-constructor)
    c_.assign(1, std::vector<F>{std::move(constant)});
    trim();
  }
  explicit Poly2(std::vector<std::vector<F>> table) : c_(std::move(table)) { trim(); }

  /// p(u) * q(v) as a bivariate polynomial.
  static Poly2 outer(const Poly<F>& p, const Poly<F>& q) {
    if (p.is_zero() || q.is_zero()) return Poly2();
    std::vector<std::vector<F>> t(*p.degree() + 1, std::vector<F>(*q.degree() + 1, F(0)));
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) t[i][j] = p.coeff(static_cast<int>(i)) * q.coeff(static_cast<int>(j));
    return Poly2(std::move(t));
  }

  bool is_zero() const { return c_.empty(); }
  int degree_u() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int degree_v() const {
    int d = -1;
    for (const auto& row : c_) d = std::max<int>(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  F coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    if (j < 0 || j >= static_cast<int>(c_[i].size())) return F(0);
    return c_[i][j];
  }

  F operator()(const F& u, const F& v) const {
    F out(0);
    for (int i = degree_u(); i >= 0; --i) {
      F row(0);
      for (int j = static_cast<int>(c_[i].size()) - 1; j >= 0; --j) row = row * v + c_[i][j];
      out = out * u + row;
    }
    return out;
  }

  /// Partial evaluation u = u0, leaving a polynomial in v.
  Poly<F> eval_u(const F& u0) const {
    std::vector<F> out(static_cast<size_t>(std::max(degree_v() + 1, 0)), F(0));
    F p(1);
    for (const auto& row : c_) {
      for (size_t j = 0; j < row.size(); ++j) out[j] += p * row[j];
      p = p * u0;
    }
    return Poly<F>(std::move(out));
  }
  /// Partial evaluation v = v0, leaving a polynomial in u.
  Poly<F> eval_v(const F& v0) const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (const auto& row : c_) {
      F acc(0);
      for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * v0 + *it;
      out.push_back(acc);
    }
    return Poly<F>(std::move(out));
  }

  friend Poly2 operator-(const Poly2& p) {
    auto t = p.c_;
    for (auto& row : t)
      for (auto& v : row) v = -v;
    return Poly2(std::move(t));
  }
  friend Poly2 operator+(const Poly2& p, const Poly2& q) {
    std::vector<std::vector<F>> t(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < t.size(); ++i) {
      const size_t w = std::max(i < p.c_.size() ? p.c_[i].size() : 0, i < q.c_.size() ? q.c_[i].size() : 0);
      t[i].assign(w, F(0));
      for (size_t j = 0; j < w; ++j)
        t[i][j] = p.coeff(static_cast<int>(i), static_cast<int>(j)) + q.coeff(static_cast<int>(i), static_cast<int>(j));
    }
    return Poly2(std::move(t));
  }
  friend Poly2 operator-(const Poly2& p, const Poly2& q) { return p + (-q); }
  friend Poly2 operator*(const Poly2& p, const Poly2& q) {
    if (p.is_zero() || q.is_zero()) return Poly2();
    std::vector<std::vector<F>> t(p.degree_u() + q.degree_u() + 1,
                                  std::vector<F>(p.degree_v() + q.degree_v() + 1, F(0)));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < p.c_[i].size(); ++j) {
        if (p.c_[i][j] == F(0)) continue;
        for (size_t k = 0; k < q.c_.size(); ++k)
          for (size_t l = 0; l < q.c_[k].size(); ++l) t[i + k][j + l] += p.c_[i][j] * q.c_[k][l];
      }
    return Poly2(std::move(t));
  }
  friend Poly2 operator*(const Poly2& p, const F& s) {
    auto t = p.c_;
    for (auto& row : t)
      for (auto& v : row) v = v * s;
    return Poly2(std::move(t));
  }
  friend bool operator==(const Poly2& p, const Poly2& q) { return (p - q).is_zero(); }
  friend bool operator!=(const Poly2& p, const Poly2& q) { return !(p == q); }

  /// Exact quotient by (v - u); throws if the remainder p(u, u) is nonzero.
  Poly2 divided_by_v_minus_u() const {
    const int dv = degree_v();
    if (dv < 0) return Poly2();
    // Treat as a polynomial in v with Poly<F> coefficients; synthetic division
    // at v = u: n_j = q_{j-1} - u q_j, remainder n_0 + u q_0.
    std::vector<Poly<F>> n(dv + 1);
    for (int j = 0; j <= dv; ++j) {
      std::vector<F> col(c_.size(), F(0));
      for (size_t i = 0; i < c_.size(); ++i) col[i] = coeff(static_cast<int>(i), j);
      n[j] = Poly<F>(std::move(col));
    }
    const Poly<F> u = Poly<F>::variable();
    std::vector<Poly<F>> q(dv, Poly<F>());
    Poly<F> carry = n[dv];
    for (int j = dv; j >= 1; --j) {
      q[j - 1] = carry;
      carry = n[j - 1] + u * carry;
    }
    if (!carry.is_zero()) throw std::domain_error("Poly2: not divisible by (v - u)");
    std::vector<std::vector<F>> t(std::max<size_t>(c_.size(), 1), std::vector<F>(std::max(dv, 1), F(0)));
    for (int j = 0; j < dv; ++j)
      for (int i = 0; i <= (q[j].degree() ? *q[j].degree() : -1); ++i) {
        if (static_cast<size_t>(i) >= t.size()) t.resize(i + 1, std::vector<F>(std::max(dv, 1), F(0)));
        t[i][j] = q[j].coeff(i);
      }
    return Poly2(std::move(t));
  }

private:
  void trim() {
    for (auto& row : c_)
      while (!row.empty() && row.back() == F(0)) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }
  std::vector<std::vector<F>> c_;  // c_[i][j] multiplies u^i v^j
};

}  // namespace squareice
