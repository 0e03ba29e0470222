#include "squareice/closedform.hpp"

#include <stdexcept>

#include "squareice/combinatorics.hpp"

namespace squareice::closedform {

Int total_count(int n) {
  if (n < 1) throw std::invalid_argument("total_count: size must be positive");
  Rational a(1), b(1);
  for (long k = 1; k <= n; ++k) {
    a *= Rational(factorial(3 * k - 2) * factorial(k - 1)) /
         Rational(factorial(2 * k - 1) * factorial(2 * k - 2));
    b *= Rational(factorial(3 * k - 2)) / Rational(factorial(2 * n - k));
  }
  if (a != b || !is_integer(a)) throw std::logic_error("total_count: product forms disagree");
  return numerator(a);
}

std::vector<Rational> one_point_x1(int n) {
  if (n < 1) throw std::invalid_argument("one_point_x1: size must be positive");
  const Rational denom{binomial(3 * n - 2, n - 1)};
  std::vector<Rational> h(n);
  for (long r = 1; r <= n; ++r)
    h[r - 1] = Rational(binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1)) / denom;
  return h;
}

Poly<Rational> generating_x1(int n) {
  if (n < 1) throw std::invalid_argument("generating_x1: size must be positive");
  // prefactor * 2F1(1-n, n; 2-2n; z) expanded term by term.
  const Rational prefactor = Rational(factorial(2 * n - 1) * factorial(2 * n - 2)) /
                             Rational(factorial(n - 1) * factorial(3 * n - 2));
  std::vector<Rational> coeffs(n);
  Rational term(1);
  for (long k = 0; k <= n - 1; ++k) {
    coeffs[k] = prefactor * term;
    if (k < n - 1)
      term *= Rational((1 - n + k)) * Rational(n + k) / (Rational(2 - 2 * n + k) * Rational(k + 1));
  }
  return Poly<Rational>(std::move(coeffs));
}

std::vector<Rational> one_point_x1_recurrence(int n) {
  if (n < 2) throw std::invalid_argument("one_point_x1_recurrence: needs size >= 2");
  std::vector<Rational> h(n);
  h[0] = Rational(1);
  for (long r = 1; r <= n - 1; ++r)
    h[r] = h[r - 1] * Rational((r - n)) * Rational(n + r - 1) / (Rational(r) * Rational(r - 2 * n + 1));
  Rational total(0);
  for (const auto& v : h) total += v;
  for (auto& v : h) v /= total;
  return h;
}

Rational three_enumeration_b(long m, long j) {
  if (m < 0) throw std::invalid_argument("three_enumeration_b: m must be nonnegative");
  if (j < 0 || j > 2 * m) return Rational(0);
  Int pow3(1);
  for (long i = 0; i < m; ++i) pow3 *= 3;
  const Rational front = Rational(factorial(2 * m + 1) * factorial(m)) / Rational(pow3 * factorial(3 * m + 2));
  Int sum(0);
  for (long l = std::max<long>(0, j - m); 2 * l <= j; ++l) {
    Int pow2(1);
    for (long i = 0; i < j - 2 * l; ++i) pow2 *= 2;
    sum += Int(2 * m + 2 - j + 2 * l) * binomial(3 * m + 3, j - 2 * l) *
           binomial(2 * m + l - j + 1, m + 1) * binomial(m + l + 1, m + 1) * pow2;
  }
  return front * Rational(sum);
}

std::vector<Rational> one_point_x3(int n) {
  if (n < 2) throw std::invalid_argument("one_point_x3: needs size >= 2");
  std::vector<Rational> h(n);
  if (n % 2 == 0) {
    const long m = (n - 2) / 2;
    for (long r = 1; r <= n; ++r)
      h[r - 1] = (three_enumeration_b(m, r - 1) + three_enumeration_b(m, r - 2)) / 2;
  } else {
    const long m = (n - 3) / 2;
    for (long r = 1; r <= n; ++r)
      h[r - 1] = (2 * three_enumeration_b(m, r - 1) + 5 * three_enumeration_b(m, r - 2) +
                  2 * three_enumeration_b(m, r - 3)) /
                 9;
  }
  return h;
}

Matrix<Rational> two_point_from_one(const std::vector<Rational>& h_n,
                                    const std::vector<Rational>& h_nm1) {
  const int n = static_cast<int>(h_n.size());
  if (static_cast<int>(h_nm1.size()) != n - 1)
    throw std::invalid_argument("two_point_from_one: tables must have sizes n and n-1");
  const auto big = [&](long r) { return r >= 1 && r <= n ? h_n[r - 1] : Rational(0); };
  const auto small = [&](long r) { return r >= 1 && r <= n - 1 ? h_nm1[r - 1] : Rational(0); };
  Matrix<Rational> out(n, n);
  for (long r1 = 1; r1 <= n; ++r1)
    for (long r2 = 1; r2 <= n; ++r2) {
      Rational acc(0);
      for (long j = 1; j <= n; ++j) {
        acc += big(r1 - j + 1) * small(n - r2 + j);
        acc -= big(r1 - j) * small(n - r2 + j);
        acc -= small(r1 - j) * big(n - r2 + j + 1);
        acc += small(r1 - j) * big(n - r2 + j);
      }
      out(r1 - 1, r2 - 1) = acc;
    }
  return out;
}

Poly2<Rational> generating_two_from_one(const Poly<Rational>& h_n, const Poly<Rational>& h_nm1) {
  const Poly<Rational> u = Poly<Rational>::variable();
  const Poly<Rational> one{Rational(1)};
  const Poly<Rational> id_small = u * h_nm1;         // w H_{n-1}(w)
  const Poly<Rational> id_big = (u - one) * h_n;     // (w-1) H_n(w)
  const Poly2<Rational> numerator =
      Poly2<Rational>::outer(id_small, id_big) - Poly2<Rational>::outer(id_big, id_small);
  return numerator.divided_by_v_minus_u();
}

std::vector<Rational> polarization_from(const std::vector<Rational>& one_point) {
  std::vector<Rational> g(one_point.size());
  Rational acc(0);
  for (size_t r = 0; r < one_point.size(); ++r) {
    acc += one_point[r];
    g[r] = acc;
  }
  return g;
}

}  // namespace squareice::closedform
