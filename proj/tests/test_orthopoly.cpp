#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squareice/closedform.hpp"
#include "squareice/combinatorics.hpp"
#include "squareice/matrix.hpp"
#include "squareice/numerics.hpp"
#include "squareice/orthopoly.hpp"

using namespace squareice;
using namespace squareice::orthopoly;

namespace {

// Hankel moment matrix [c_{j+k}] of size (n+1) x (n+1).
Matrix<Rational> hankel_matrix(const MomentSeq<Rational>& m, int n) {
  Matrix<Rational> out(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) out(j, k) = m.c.at(j + k);
  return out;
}

// Determinant oracle for the bordered matrix whose last column is 1, x, ...,
// x^n, expanded along that column.
Poly<Rational> bordered_polynomial(const MomentSeq<Rational>& m, int n) {
  Poly<Rational> out;
  const Poly<Rational> x = Poly<Rational>::variable();
  for (int i = 0; i <= n; ++i) {
    Matrix<Rational> minor(n, n);
    int a = 0;
    for (int r = 0; r <= n; ++r) {
      if (r == i) continue;
      for (int b = 0; b < n; ++b) minor(a, b) = m.c.at(r + b);
      ++a;
    }
    Rational cof = det_bareiss(minor);
    if ((i + n) % 2 != 0) cof = -cof;
    out += cof * x.pow(i);
  }
  return out;
}

Real pow10(int e) {
  Real out(1);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out *= 10;
  return e >= 0 ? out : 1 / out;
}

}  // namespace

TEST_CASE("exact ice polynomials") {
  CHECK(ice_polynomial(0) == Poly<Rational>(Rational(1)));
  CHECK(ice_polynomial(1) == Poly<Rational>::variable() / Rational(3));
  CHECK(ice_polynomial(2).leading() == Rational(1, 6));
  for (int n = 0; n <= 10; ++n) {
    const auto p = ice_polynomial(n);
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == n);
    CHECK(p.leading() == ice_norm(n).kappa);
    // Definite parity: the weight is even at the symmetric point.
    for (int k = n - 1; k >= 0; k -= 2) CHECK(p.coeff(k) == 0);
  }
}

TEST_CASE("exact ice norms") {
  CHECK(ice_norm(0).h_sqrt3 == 2);  // h_0 = 2/sqrt(3)
  CHECK(ice_norm(0).kappa == 1);
  CHECK(ice_norm(1).kappa == Rational(1, 3));
  CHECK(ice_norm(1).h_sqrt3 == Rational(2 * 24, 3 * 27));  // 2*4!/(3*3^3*1!)
  CHECK(ice_norm(0).h() == Root3(Rational(0), Rational(2, 3)));
}

TEST_CASE("exact ice moments") {
  const auto m = ice_moments_over_sqrt3(12);
  CHECK(m.c[0] == Rational(2, 3));
  for (int k = 1; k <= 12; k += 2) CHECK(m.c[k] == 0);

  // Orthogonality of the closed-form family under the moment functional:
  // the Gram matrix is exactly diagonal with the closed-form norms.
  const auto sys = ice_system(5);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= a; ++b) {
      const Rational inner = apply_moments(m, sys.p[a] * sys.p[b]);
      CHECK(inner == (a == b ? sys.h[a] : Rational(0)));
    }

  // Three-term structure: <x p_n p_{n+1}> = h_{n+1} kappa_n / kappa_{n+1}.
  const Poly<Rational> x = Poly<Rational>::variable();
  for (int n = 0; n <= 4; ++n)
    CHECK(apply_moments(m, x * sys.p[n] * sys.p[n + 1]) ==
          sys.h[n + 1] * sys.kappa[n] / sys.kappa[n + 1]);
}

TEST_CASE("hankel determinants from norms match the moment determinants") {
  const auto m = ice_moments_over_sqrt3(10);
  const auto sys = ice_system(5);
  CHECK(hankel_from_norms(sys, 0) == Rational(2, 3));
  for (int n = 0; n <= 4; ++n) CHECK(hankel_from_norms(sys, n) == det_bareiss(hankel_matrix(m, n)));
  CHECK_THROWS_AS(hankel_from_norms(sys, 6), std::invalid_argument);
}

TEST_CASE("monic family from exact moments") {
  const auto m = ice_moments_over_sqrt3(14);
  const auto monic = system_from_moments(m, 6);
  CHECK(monic.p[1] == Poly<Rational>::variable());  // c_1 vanishes
  for (int n = 0; n <= 6; ++n) {
    const auto paper = ice_polynomial(n);
    const Rational kappa = ice_norm(n).kappa;
    CHECK(monic.p[n] * kappa == paper);
    // Norms transform with the leading coefficient squared.
    CHECK(monic.h[n] * kappa * kappa == ice_norm(n).h_sqrt3 / 3);
  }

  // Determinant route: p_n = D_n^(1)(x) / D_{n-1} for the monic family.
  for (int n = 1; n <= 4; ++n) {
    const Rational d_prev = det_bareiss(hankel_matrix(m, n - 1));
    CHECK(monic.p[n] * d_prev == bordered_polynomial(m, n));
    // And h_n / kappa_n^2 = D_n / D_{n-1}.
    CHECK(monic.h[n] == det_bareiss(hankel_matrix(m, n)) / d_prev);
  }

  MomentSeq<Rational> degenerate{{Rational(0), Rational(0), Rational(0), Rational(0)}, "degenerate"};
  CHECK_THROWS_AS(system_from_moments(degenerate, 1), std::domain_error);
}

TEST_CASE("ice partition function") {
  CHECK(ice_partition(1).rational_factor == 1);
  CHECK(ice_partition(2).rational_factor == 2);
  CHECK(ice_partition(5).rational_factor == 429);
  CHECK(ice_partition(2).value() == Root3(Rational(9, 8)));
  CHECK(ice_partition(1).value() == Root3(Rational(0), Rational(1, 2)));  // sqrt(3)/2

  for (int n = 1; n <= 8; ++n)
    CHECK(ice_partition(n).rational_factor == closedform::total_count(n));

  // Determinant route: (3/4)^(n^2) prod h_k/((k!)^2 kappa_k^2) in Q(sqrt 3).
  for (int n = 1; n <= 8; ++n) {
    Root3 z{Rational(1)};
    for (long k = 0; k < n; ++k) {
      const auto nk = ice_norm(static_cast<int>(k));
      const Rational f{factorial(k)};
      z *= nk.h() / Root3(f * f * nk.kappa * nk.kappa);
    }
    Rational front(1);
    for (long i = 0; i < static_cast<long>(n) * n; ++i) front *= Rational(3, 4);
    z *= Root3(front);
    CHECK(z == ice_partition(n).value());
  }
}

TEST_CASE("finite difference equation") {
  for (int n = 1; n <= 8; ++n) CHECK(ice_difference_check(n));
  CHECK(ice_difference_residual(1).is_zero());
  CHECK_THROWS_AS(ice_difference_residual(0), std::invalid_argument);
}

TEST_CASE("operator form of the one-point correlator, exact") {
  CHECK(ice_one_point_operator(2) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(ice_one_point_operator(3) ==
        std::vector<Rational>{Rational(2, 7), Rational(3, 7), Rational(2, 7)});
  for (int n = 1; n <= 8; ++n) CHECK(ice_one_point_operator(n) == closedform::one_point_x1(n));
}

TEST_CASE("numeric moments agree with the exact ice moments") {
  const unsigned digits = 40;
  const auto params = numerics::ice_params(digits);
  const PrecisionGuard guard(digits + numerics::kGuardDigits);
  const auto numeric = numerics::moments(params, 10);
  const auto exact = ice_moments_over_sqrt3(10);
  const Real sqrt3 = sqrt(Real(3));
  for (int k = 0; k <= 10; ++k)
    CHECK(abs(numeric[k] - to_real(exact.c[k]) * sqrt3) < pow10(-static_cast<int>(digits) + 3));
}

TEST_CASE("numeric orthogonal systems at generic parameters") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits + numerics::kGuardDigits);
  const Real tol = pow10(-static_cast<int>(digits) + 10);
  for (const auto& [l, e] : std::vector<std::pair<const char*, const char*>>{
           {"1.2", "0.5"}, {"1.8", "0.7"}, {"1.5707963267948966", "0.9"}}) {
    const auto params = numerics::params_from_strings(l, e, digits);
    const auto moments = numerics::moments(params, 21);
    const MomentSeq<Real> seq{moments, "numeric"};
    const auto sys = system_from_moments(seq, 10);
    // Gram residual: off-diagonal inner products vanish to tolerance.
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b < a; ++b) CHECK(abs(apply_moments(seq, sys.p[a] * sys.p[b])) < tol);
  }
}

TEST_CASE("crossing symmetry of the numeric family") {
  const unsigned digits = 30;
  const auto params = numerics::params_from_strings("1.2", "0.5", digits);
  CHECK(crossing_defect(6, params) < pow10(-static_cast<int>(digits) + 10));
  // The symmetric point is its own mirror.
  const auto sym = numerics::ice_params(digits);
  CHECK(crossing_defect(6, sym) < pow10(-static_cast<int>(digits) + 10));
}

TEST_CASE("operator form at numeric parameters") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits + numerics::kGuardDigits);
  const auto h = one_point_operator(4, numerics::ice_params(digits));
  const auto exact = closedform::one_point_x1(4);
  for (int r = 0; r < 4; ++r)
    CHECK(abs(h[r] - to_real(exact[r])) < pow10(-static_cast<int>(digits) + 10));
}
