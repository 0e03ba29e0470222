#pragma once

#include <string>

#include "squareice/numeric_types.hpp"

namespace squareice {

/// Element of the quadratic field Q(sqrt 3): a + b*sqrt(3), exact.
/// Carries every irrational constant of the ice-point pipeline.
struct Root3 {
  Rational a, b;

  Root3() = default;
  Root3(Rational r) : a(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Root3(long r) : a(r) {}                 // NOLINT(google-explicit-constructor)
  Root3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Root3 sqrt3() { return {Rational(0), Rational(1)}; }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  Real numeric() const { return to_real(a) + to_real(b) * sqrt(Real(3)); }
};

inline bool operator==(const Root3& x, const Root3& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const Root3& x, const Root3& y) { return !(x == y); }

inline Root3 operator-(const Root3& x) { return {-x.a, -x.b}; }
inline Root3 operator+(const Root3& x, const Root3& y) { return {x.a + y.a, x.b + y.b}; }
inline Root3 operator-(const Root3& x, const Root3& y) { return {x.a - y.a, x.b - y.b}; }
inline Root3 operator*(const Root3& x, const Root3& y) {
  return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline Root3 operator/(const Root3& x, const Root3& y) {
  // (a - b*sqrt3)(a + b*sqrt3) = a^2 - 3 b^2, zero only for the zero element.
  const Rational n = y.a * y.a - 3 * y.b * y.b;
  if (n == 0) throw std::domain_error("Root3: division by zero");
  const Root3 p = x * Root3{y.a, -y.b};
  return {p.a / n, p.b / n};
}
inline Root3& operator+=(Root3& x, const Root3& y) { return x = x + y; }
inline Root3& operator-=(Root3& x, const Root3& y) { return x = x - y; }
inline Root3& operator*=(Root3& x, const Root3& y) { return x = x * y; }
inline Root3& operator/=(Root3& x, const Root3& y) { return x = x / y; }

/// (sqrt 3)^k for any integer k, exact.
inline Root3 sqrt3_power(long k) {
  Root3 unit = k >= 0 ? Root3::sqrt3() : Root3(Rational(1)) / Root3::sqrt3();
  Root3 out{Rational(1)};
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) out *= unit;
  return out;
}

inline std::string to_string(const Root3& x) {
  if (x.b == 0) return to_string(x.a);
  std::string tail = to_string(abs(x.b)) + "*sqrt(3)";
  if (x.a == 0) return (x.b < 0 ? "-" : "") + tail;
  return to_string(x.a) + (x.b < 0 ? " - " : " + ") + tail;
}

}  // namespace squareice
