#pragma once

#include <stdexcept>
#include <vector>

#include "squareice/combinatorics.hpp"
#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"
#include "squareice/root3.hpp"

namespace squareice {

/// Embed an exact rational constant into a scalar field.
template <class F>
F field_from_rational(const Rational& q) {
  return F(numerator(q).str()) / F(denominator(q).str());
}
template <>
inline Rational field_from_rational<Rational>(const Rational& q) { return q; }
template <>
inline Real field_from_rational<Real>(const Rational& q) { return to_real(q); }
template <>
inline Root3 field_from_rational<Root3>(const Rational& q) { return Root3(q); }

/// Truncated power series of fixed order K in one expansion variable.
/// All arithmetic truncates consistently at order K.
template <class F>
class Jet {
public:
  explicit Jet(int order) : c_(order + 1, F(0)) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
  }
  static Jet constant(const F& value, int order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
  }
  static Jet variable(int order) {
    Jet j(order);
    if (order >= 1) j.c_[1] = F(1);
    return j;
  }
  static Jet from_coeffs(std::vector<F> coeffs) {
    Jet j(static_cast<int>(coeffs.size()) - 1);
    j.c_ = std::move(coeffs);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const F& coeff(int i) const { return c_.at(i); }
  F& coeff(int i) { return c_.at(i); }

  /// j-th derivative at the expansion point: j! * c_j.
  F derivative(int j) const {
    if (j > order()) throw std::invalid_argument("Jet: derivative beyond truncation order");
    return c_[j] * field_from_rational<F>(Rational(factorial(j)));
  }

  friend Jet operator-(const Jet& f) {
    Jet g = f;
    for (auto& v : g.c_) v = -v;
    return g;
  }
  friend Jet operator+(const Jet& f, const Jet& g) {
    Jet h(check_orders(f, g));
    for (int i = 0; i <= h.order(); ++i) h.c_[i] = f.c_[i] + g.c_[i];
    return h;
  }
  friend Jet operator-(const Jet& f, const Jet& g) { return f + (-g); }
  friend Jet operator*(const Jet& f, const Jet& g) {
    Jet h(check_orders(f, g));
    for (int i = 0; i <= h.order(); ++i)
      for (int j = 0; i + j <= h.order(); ++j) h.c_[i + j] += f.c_[i] * g.c_[j];
    return h;
  }
  friend Jet operator*(const Jet& f, const F& s) {
    Jet g = f;
    for (auto& v : g.c_) v = v * s;
    return g;
  }
  friend Jet operator*(const F& s, const Jet& f) { return f * s; }

  /// Division; requires a nonzero constant term in the divisor.
  friend Jet operator/(const Jet& f, const Jet& g) {
    const int k = check_orders(f, g);
    if (g.c_[0] == F(0)) throw std::domain_error("Jet: division needs a nonzero constant term");
    Jet q(k);
    for (int i = 0; i <= k; ++i) {
      F acc = f.c_[i];
      for (int j = 1; j <= i; ++j) acc -= g.c_[j] * q.c_[i - j];
      q.c_[i] = acc / g.c_[0];
    }
    return q;
  }
  Jet& operator+=(const Jet& g) { return *this = *this + g; }
  Jet& operator*=(const Jet& g) { return *this = *this * g; }

  friend bool operator==(const Jet& f, const Jet& g) { return f.c_ == g.c_; }
  friend bool operator!=(const Jet& f, const Jet& g) { return !(f == g); }

  Jet pow(long e) const {
    if (e < 0) throw std::invalid_argument("Jet::pow: negative exponent");
    Jet out = constant(F(1), order());
    Jet base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) out *= base;
      if (e > 1) base *= base;
    }
    return out;
  }

  /// Taylor series of sin and cos at 0 (coefficients are rational in any F).
  static Jet sin_series(int order) {
    Jet j(order);
    Rational c(1);
    for (int i = 1; i <= order; i += 2) {
      j.c_[i] = field_from_rational<F>(c / Rational(factorial(i)));
      c = -c;
    }
    return j;
  }
  static Jet cos_series(int order) {
    Jet j(order);
    Rational c(1);
    for (int i = 0; i <= order; i += 2) {
      j.c_[i] = field_from_rational<F>(c / Rational(factorial(i)));
      c = -c;
    }
    return j;
  }
  /// sin(c + eps) given sin(c) and cos(c).
  static Jet sin_shifted(const F& sin_c, const F& cos_c, int order) {
    return sin_c * cos_series(order) + cos_c * sin_series(order);
  }

private:
  static int check_orders(const Jet& f, const Jet& g) {
    if (f.order() != g.order()) throw std::invalid_argument("Jet: mixed truncation orders");
    return f.order();
  }
  std::vector<F> c_;
};

namespace detail {
// sin/cos of the nilpotent part of f (the constant term removed).
inline std::pair<Jet<Real>, Jet<Real>> sincos_nilpotent(const Jet<Real>& f) {
  const int k = f.order();
  Jet<Real> nil = f - Jet<Real>::constant(f.coeff(0), k);
  Jet<Real> s(k), c(k);
  Jet<Real> p = Jet<Real>::constant(Real(1), k);
  for (int m = 0; m <= k; ++m) {
    const Real inv_fact = to_real(Rational(1) / Rational(factorial(m)));
    const int sign = (m / 2) % 2 == 0 ? 1 : -1;
    if (m % 2 == 0)
      c += p * (sign * inv_fact);
    else
      s += p * (sign * inv_fact);
    if (m < k) p *= nil;
  }
  return {s, c};
}
}  // namespace detail

/// sin/cos of a Real jet (general composition; splits off the constant term).
inline Jet<Real> sin_of(const Jet<Real>& f) {
  const auto [s, c] = detail::sincos_nilpotent(f);
  return sin(f.coeff(0)) * c + cos(f.coeff(0)) * s;
}
inline Jet<Real> cos_of(const Jet<Real>& f) {
  const auto [s, c] = detail::sincos_nilpotent(f);
  return cos(f.coeff(0)) * c - sin(f.coeff(0)) * s;
}

/// P(d/deps) f |_{eps=0} = sum_j p_j j! [eps^j] f.
template <class F>
F apply_derivative_poly(const Poly<F>& p, const Jet<F>& f) {
  if (!p.is_zero() && *p.degree() > f.order())
    throw std::invalid_argument("apply_derivative_poly: jet order below polynomial degree");
  F out(0);
  if (p.is_zero()) return out;
  for (int j = 0; j <= *p.degree(); ++j) out += p.coeff(j) * f.derivative(j);
  return out;
}

/// Bivariate truncated power series; coefficients kept for total order <= K.
template <class F>
class Jet2 {
public:
  explicit Jet2(int order) : k_(order) {
    if (order < 0) throw std::invalid_argument("Jet2: negative order");
    c_.assign(static_cast<size_t>((order + 1) * (order + 2) / 2), F(0));
  }
  static Jet2 constant(const F& value, int order) {
    Jet2 j(order);
    j.at(0, 0) = value;
    return j;
  }
  /// Embed a univariate jet as a series in the first / second variable.
  static Jet2 lift1(const Jet<F>& f, int order) {
    Jet2 j(order);
    for (int i = 0; i <= std::min(order, f.order()); ++i) j.at(i, 0) = f.coeff(i);
    return j;
  }
  static Jet2 lift2(const Jet<F>& f, int order) {
    Jet2 j(order);
    for (int i = 0; i <= std::min(order, f.order()); ++i) j.at(0, i) = f.coeff(i);
    return j;
  }

  int order() const { return k_; }
  const F& coeff(int i, int j) const { return c_.at(index(i, j)); }

  /// Mixed derivative at the expansion point: i! j! * c_{ij}.
  F derivative(int i, int j) const {
    if (i + j > k_) throw std::invalid_argument("Jet2: derivative beyond truncation order");
    return coeff(i, j) * field_from_rational<F>(Rational(factorial(i) * factorial(j)));
  }

  friend Jet2 operator-(const Jet2& f) {
    Jet2 g = f;
    for (auto& v : g.c_) v = -v;
    return g;
  }
  friend Jet2 operator+(const Jet2& f, const Jet2& g) {
    Jet2 h(check_orders(f, g));
    for (size_t i = 0; i < h.c_.size(); ++i) h.c_[i] = f.c_[i] + g.c_[i];
    return h;
  }
  friend Jet2 operator-(const Jet2& f, const Jet2& g) { return f + (-g); }
  friend Jet2 operator*(const Jet2& f, const Jet2& g) {
    const int k = check_orders(f, g);
    Jet2 h(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b) {
        if (f.coeff(a, b) == F(0)) continue;
        for (int c = 0; a + c <= k; ++c)
          for (int d = 0; a + b + c + d <= k; ++d) h.at(a + c, b + d) += f.coeff(a, b) * g.coeff(c, d);
      }
    return h;
  }
  friend Jet2 operator*(const Jet2& f, const F& s) {
    Jet2 g = f;
    for (auto& v : g.c_) v = v * s;
    return g;
  }
  friend Jet2 operator*(const F& s, const Jet2& f) { return f * s; }
  Jet2& operator+=(const Jet2& g) { return *this = *this + g; }
  Jet2& operator*=(const Jet2& g) { return *this = *this * g; }

  friend bool operator==(const Jet2& f, const Jet2& g) { return f.c_ == g.c_; }
  friend bool operator!=(const Jet2& f, const Jet2& g) { return !(f == g); }

  Jet2 pow(long e) const {
    if (e < 0) throw std::invalid_argument("Jet2::pow: negative exponent");
    Jet2 out = constant(F(1), k_);
    Jet2 base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) out *= base;
      if (e > 1) base *= base;
    }
    return out;
  }

  /// Reciprocal via the Neumann series around the constant term.
  Jet2 reciprocal() const {
    if (coeff(0, 0) == F(0)) throw std::domain_error("Jet2: reciprocal needs a nonzero constant term");
    const F inv0 = F(1) / coeff(0, 0);
    Jet2 nil = -(*this * inv0);
    nil.at(0, 0) = F(0);  // nil = 1 - f/f0, no constant term
    Jet2 out = constant(F(1), k_);
    Jet2 p = constant(F(1), k_);
    for (int m = 1; m <= k_; ++m) {
      p *= nil;
      out += p;
    }
    return out * inv0;
  }
  friend Jet2 operator/(const Jet2& f, const Jet2& g) { return f * g.reciprocal(); }

private:
  static int check_orders(const Jet2& f, const Jet2& g) {
    if (f.order() != g.order()) throw std::invalid_argument("Jet2: mixed truncation orders");
    return f.order();
  }
  size_t index(int i, int j) const {
    const int t = i + j;
    if (i < 0 || j < 0 || t > k_) throw std::out_of_range("Jet2: index outside the triangle");
    return static_cast<size_t>(t * (t + 1) / 2 + j);
  }
  F& at(int i, int j) { return c_[index(i, j)]; }

  int k_;
  std::vector<F> c_;
};

}  // namespace squareice
