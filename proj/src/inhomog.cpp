#include "squareice/inhomog.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "squareice/matrix.hpp"
#include "squareice/oracle.hpp"

namespace squareice::inhomog {

void InhomSpec::validate() const {
  if (n < 1) throw std::invalid_argument("InhomSpec: size must be positive");
  if (k < 1 || k > n) throw std::invalid_argument("InhomSpec: need 1 <= k <= n");
  if (static_cast<int>(u.size()) != k) throw std::invalid_argument("InhomSpec: need k variables");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (u[i] == u[j]) throw std::invalid_argument("InhomSpec: variables must be pairwise distinct");
}

GeneratingFamily family_from_oracle(const InhomSpec& spec) {
  spec.validate();
  GeneratingFamily family;
  family.reserve(spec.k);
  for (int i = 0; i < spec.k; ++i)
    family.push_back(oracle::generating_one(spec.n - spec.k + 1 + i, spec.x));
  return family;
}

namespace {

void check_family(const InhomSpec& spec, const GeneratingFamily& family) {
  spec.validate();
  if (static_cast<int>(family.size()) != spec.k)
    throw std::invalid_argument("generating family: need k polynomials");
  for (int i = 0; i < spec.k; ++i) {
    const int size = spec.n - spec.k + 1 + i;
    const auto deg = family[i].degree();
    if (!deg || *deg != size - 1)
      throw std::invalid_argument("generating family: wrong degree at slot " + std::to_string(i));
    if (family[i](Rational(1)) != 1)
      throw std::invalid_argument("generating family: polynomial not normalized at slot " + std::to_string(i));
  }
}

Rational int_pow(const Rational& b, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

Rational vandermonde(const std::vector<Rational>& u) {
  Rational out(1);
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j) out *= u[j] - u[i];
  return out;
}

}  // namespace

Rational determinant_value(const InhomSpec& spec, const GeneratingFamily& family) {
  check_family(spec, family);
  const int k = spec.k;
  Matrix<Rational> m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m(i, j) = int_pow(spec.u[j], k - 1 - i) * int_pow(spec.u[j] - 1, i) * family[i](spec.u[j]);
  return det_bareiss(m) / vandermonde(spec.u);
}

Poly<Rational> last_variable_polynomial(const InhomSpec& spec, const GeneratingFamily& family) {
  check_family(spec, family);
  const int k = spec.k;
  // The determinant is linear in the last column; its cofactors involve only
  // the numeric columns, so the full object is a univariate polynomial that
  // the partial Vandermonde divides exactly.
  const Poly<Rational> u = Poly<Rational>::variable();
  const Poly<Rational> one{Rational(1)};
  Poly<Rational> det;
  for (int i = 0; i < k; ++i) {
    Rational cofactor(0);
    if (k == 1) {
      cofactor = Rational(1);
    } else {
      Matrix<Rational> minor(k - 1, k - 1);
      int ri = 0;
      for (int a = 0; a < k; ++a) {
        if (a == i) continue;
        for (int j = 0; j + 1 < k; ++j)
          minor(ri, j) = int_pow(spec.u[j], k - 1 - a) * int_pow(spec.u[j] - 1, a) * family[a](spec.u[j]);
        ++ri;
      }
      cofactor = det_bareiss(minor);
      if ((i + k - 1) % 2 != 0) cofactor = -cofactor;
    }
    det += cofactor * (u.pow(k - 1 - i) * (u - one).pow(i) * family[i]);
  }
  Poly<Rational> divisor{Rational(1)};
  for (int j = 0; j + 1 < k; ++j) divisor *= (u - Poly<Rational>(spec.u[j]));
  Poly<Rational> quotient = exact_div(det, divisor);
  // Remaining normalization: the Vandermonde of the fixed k-1 variables.
  std::vector<Rational> fixed(spec.u.begin(), spec.u.end() - 1);
  return quotient / vandermonde(fixed);
}

bool collapse_check(const InhomSpec& spec, const GeneratingFamily& family) {
  check_family(spec, family);
  if (spec.k < 2) return true;  // nothing to collapse
  const Poly<Rational> z = last_variable_polynomial(spec, family);
  InhomSpec reduced{spec.n, spec.k - 1, std::vector<Rational>(spec.u.begin(), spec.u.end() - 1), spec.x};
  // The reduced determinant uses sizes n-k+2..n: drop the smallest polynomial.
  GeneratingFamily shrunk(family.begin() + 1, family.end());
  return z(Rational(1)) == determinant_value(reduced, shrunk);
}

bool korepin_check(const InhomSpec& spec) {
  spec.validate();
  if (spec.n < 2) throw std::invalid_argument("korepin_check: needs size >= 2");
  for (const auto& v : spec.u)
    if (v == 0) throw std::invalid_argument("korepin_check: variables must avoid 0");

  // Value of the n-determinant with the last variable sent to 0.
  InhomSpec at_zero{spec.n, spec.k, spec.u, spec.x};
  at_zero.u.back() = Rational(0);
  const GeneratingFamily family = family_from_oracle(at_zero);
  const Rational lhs = determinant_value(at_zero, family);

  const Rational h_n_at_0 = family.back()(Rational(0));
  Rational rhs;
  if (spec.k == 1) {
    rhs = h_n_at_0;  // the reduced partition function is homogeneous, so 1
  } else {
    InhomSpec reduced{spec.n - 1, spec.k - 1,
                      std::vector<Rational>(spec.u.begin(), spec.u.end() - 1), spec.x};
    rhs = h_n_at_0 * determinant_value(reduced, family_from_oracle(reduced));
  }
  return lhs == rhs;
}

OracleComparison matches_oracle(int n, const Rational& q, int k, int tuples, std::uint64_t seed) {
  if (tuples < 1) throw std::invalid_argument("matches_oracle: need at least one tuple");
  const Rational x = oracle::x_of_q(q);
  OracleComparison out;
  for (int t = 0; t < tuples; ++t) {
    InhomSpec spec{n, k, random_rationals(k, seed + static_cast<std::uint64_t>(t)), x};
    const GeneratingFamily family = family_from_oracle(spec);
    const Rational via_det = determinant_value(spec, family);
    std::vector<Rational> full(n, Rational(1));
    for (int i = 0; i < k; ++i) full[i] = spec.u[i];
    const Rational via_sum = oracle::inhomogeneous_partition(n, q, full);
    if (via_det != via_sum) {
      std::ostringstream msg;
      msg << "mismatch at n=" << n << " k=" << k << " q=" << q << " u=(";
      for (int i = 0; i < k; ++i) msg << (i ? "," : "") << spec.u[i];
      msg << "): determinant " << via_det << " vs sum " << via_sum;
      out.ok = false;
      out.detail = msg.str();
      return out;
    }
  }
  return out;
}

std::vector<Rational> random_rationals(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    const Rational v = Rational(num(gen)) / Rational(den(gen));
    if (v == 0 || v == 1) continue;
    if (!seen.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace squareice::inhomog
