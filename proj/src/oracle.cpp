#include "squareice/oracle.hpp"

#include <stdexcept>

namespace squareice::oracle {

namespace {

Rational x_power(const Rational& x, long k) {
  Rational p(1);
  for (long i = 0; i < k; ++i) p *= x;
  return p;
}

void check_size(int n) {
  if (n < 1) throw std::invalid_argument("oracle: size must be positive");
  if (n > 7) throw std::invalid_argument("oracle: exhaustive enumeration is capped at n = 7");
}

}  // namespace

Rational weighted_count(int n, const Rational& x) {
  check_size(n);
  Rational total(0);
  enumerate_asms(n, [&](const Asm& a) { total += x_power(x, stats(a).minus_ones); });
  return total;
}

std::vector<Rational> refined_counts(int n, const Rational& x) {
  check_size(n);
  std::vector<Rational> out(n, Rational(0));
  enumerate_asms(n, [&](const Asm& a) {
    const AsmStats s = stats(a);
    out[s.last_col_row - 1] += x_power(x, s.minus_ones);
  });
  return out;
}

Matrix<Rational> doubly_refined_counts(int n, const Rational& x) {
  check_size(n);
  Matrix<Rational> out(n, n);
  out.setConstant(Rational(0));
  enumerate_asms(n, [&](const Asm& a) {
    const AsmStats s = stats(a);
    out(s.first_col_row - 1, s.last_col_row - 1) += x_power(x, s.minus_ones);
  });
  return out;
}

CorrelatorTable correlators(int n, const Rational& x) {
  check_size(n);
  CorrelatorTable t;
  t.n = n;
  t.one_point.assign(n, Rational(0));
  t.two_point.resize(n, n);
  t.two_point.setConstant(Rational(0));
  Rational total(0);
  enumerate_asms(n, [&](const Asm& a) {
    const AsmStats s = stats(a);
    const Rational w = x_power(x, s.minus_ones);
    total += w;
    t.one_point[s.top_row_col_from_right - 1] += w;
    t.two_point(s.top_row_col_from_right - 1, s.bottom_row_col_from_right - 1) += w;
  });
  if (total == 0) throw std::domain_error("oracle: weighted count vanishes, correlators undefined");
  for (auto& v : t.one_point) v /= total;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.two_point(i, j) /= total;
  t.polarization.assign(n, Rational(0));
  Rational acc(0);
  for (int r = 0; r < n; ++r) {
    acc += t.one_point[r];
    t.polarization[r] = acc;
  }
  return t;
}

Poly<Rational> generating_one(int n, const Rational& x) {
  const CorrelatorTable t = correlators(n, x);
  std::vector<Rational> coeffs(n);
  for (int r = 1; r <= n; ++r) coeffs[r - 1] = t.one_point[n - r];
  return Poly<Rational>(std::move(coeffs));
}

Poly2<Rational> generating_two(int n, const Rational& x) {
  const CorrelatorTable t = correlators(n, x);
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n, Rational(0)));
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s) table[r - 1][s - 1] = t.two_point(n - r, s - 1);
  return Poly2<Rational>(std::move(table));
}

Rational x_of_q(const Rational& q) {
  if (q == 0 || q == 1 || q == -1)
    throw std::invalid_argument("x_of_q: q must avoid {0, 1, -1}");
  const Rational d = 1 - q;
  return -d * d / q;
}

Rational inhomogeneous_partition(int n, const Rational& q, const std::vector<Rational>& u) {
  check_size(n);
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("inhomogeneous_partition: need one variable per column");
  const Rational x = x_of_q(q);  // also validates q

  // Per-column factor u^n_b * [(u-q)(1-uq)/(-q)]^((n_c-1)/2), the reduction of
  // the reparametrized weights after normalizing per column by c(1) a(1)^(n-1).
  std::vector<Rational> pair_factor(n);  // (u-q)(1-uq)/(-q) per column
  for (int j = 0; j < n; ++j) pair_factor[j] = (u[j] - q) * (1 - u[j] * q) / (-q);

  Rational total(0);
  enumerate_asms(n, [&](const Asm& a) {
    const VertexGrid g = to_vertex_grid(a);
    Rational term(1);
    for (int j = 0; j < n; ++j) {
      int nb = 0, nc = 0;
      for (int i = 0; i < n; ++i) {
        const int t = g.type(i, j);
        if (t == 3 || t == 4) ++nb;
        if (t == 5 || t == 6) ++nc;
      }
      for (int e = 0; e < nb; ++e) term *= u[j];
      for (int e = 0; e < (nc - 1) / 2; ++e) term *= pair_factor[j];
    }
    total += term;
  });

  // At u = (1,...,1) every pair factor equals x, so the normalization is the
  // weighted count.
  const Rational norm = weighted_count(n, x);
  if (norm == 0) throw std::domain_error("inhomogeneous_partition: weighted count vanishes");
  return total / norm;
}

std::vector<Poly<Rational>> generating_family(int n, const Rational& x) {
  std::vector<Poly<Rational>> out;
  out.reserve(n);
  for (int m = 1; m <= n; ++m) out.push_back(generating_one(m, x));
  return out;
}

}  // namespace squareice::oracle
