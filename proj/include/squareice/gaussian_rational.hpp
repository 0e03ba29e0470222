#pragma once

#include <optional>
#include <string>

#include "squareice/numeric_types.hpp"

namespace squareice {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conjugate() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
};

inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

inline GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}
inline GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}
inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const Rational n = b.norm();
  if (n == 0) throw std::domain_error("GaussianRational: division by zero");
  const GaussianRational p = a * b.conjugate();
  return {p.re / n, p.im / n};
}
inline GaussianRational& operator+=(GaussianRational& a, const GaussianRational& b) { return a = a + b; }
inline GaussianRational& operator-=(GaussianRational& a, const GaussianRational& b) { return a = a - b; }
inline GaussianRational& operator*=(GaussianRational& a, const GaussianRational& b) { return a = a * b; }
inline GaussianRational& operator/=(GaussianRational& a, const GaussianRational& b) { return a = a / b; }

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  return to_string(z.re) + (z.im < 0 ? " - " : " + ") + to_string(abs(z.im)) + "*i";
}

inline std::optional<long> exact_integer(const Rational& a) {
  if (!is_integer(a)) return std::nullopt;
  const Int n = numerator(a);
  if (n > Int(std::numeric_limits<long>::max()) || n < Int(std::numeric_limits<long>::min()))
    return std::nullopt;
  return static_cast<long>(n);
}

inline std::optional<long> exact_integer(const GaussianRational& a) {
  if (!a.is_real()) return std::nullopt;
  return exact_integer(a.re);
}

}  // namespace squareice
