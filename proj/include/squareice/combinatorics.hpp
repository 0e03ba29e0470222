#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "squareice/gaussian_rational.hpp"
#include "squareice/numeric_types.hpp"

namespace squareice {

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int out(1);
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int out(1);
  for (long j = 1; j <= k; ++j) {
    out *= (n - k + j);
    out /= j;  // exact at every step: out is C(n-k+j, j)
  }
  return out;
}

/// Rising factorial a(a+1)...(a+m-1); empty product for m = 0.
template <class F>
F pochhammer(F a, long m) {
  if (m < 0) throw std::invalid_argument("pochhammer: negative length");
  F out(1);
  for (long j = 0; j < m; ++j) {
    out = out * a;
    a = a + F(1);
  }
  return out;
}

/// Terminating 3F2(a1,a2,a3; b1,b2; 1). The upper parameter selected by
/// top_index must be a nonpositive integer -n; the sum then has n+1 terms.
/// Throws std::domain_error if a lower Pochhammer vanishes inside the sum.
template <class F>
F hyp3f2_terminating(const F& a1, const F& a2, const F& a3, const F& b1, const F& b2,
                     int top_index) {
  if (top_index < 0 || top_index > 2)
    throw std::invalid_argument("hyp3f2_terminating: top_index must be 0, 1 or 2");
  const std::array<const F*, 3> upper = {&a1, &a2, &a3};
  const auto top = exact_integer(*upper[top_index]);
  if (!top || *top > 0)
    throw std::invalid_argument("hyp3f2_terminating: selected upper parameter is not a nonpositive integer");
  const long n = -*top;
  for (const F* b : {&b1, &b2}) {
    const auto v = exact_integer(*b);
    if (v && *v <= 0 && *v > -n)
      throw std::domain_error("hyp3f2_terminating: lower Pochhammer vanishes inside the sum");
  }
  F sum(0), term(1);
  for (long k = 0;; ++k) {
    sum = sum + term;
    if (k == n) break;
    const F kf(k);
    term = term * (a1 + kf) * (a2 + kf) * (a3 + kf) / ((b1 + kf) * (b2 + kf) * F(k + 1));
  }
  return sum;
}

/// Terminating 2F1(a1,a2; b; 1) through the 3F2 engine, one upper slot unused.
template <class F>
F hyp2f1_terminating(const F& a1, const F& a2, const F& b) {
  const auto v1 = exact_integer(a1);
  const int top = (v1 && *v1 <= 0) ? 0 : 1;
  return hyp3f2_terminating<F>(a1, a2, F(1), b, F(1), top);
}

}  // namespace squareice
