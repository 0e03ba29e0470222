#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squareice/closedform.hpp"
#include "squareice/jet.hpp"
#include "squareice/numerics.hpp"
#include "squareice/oracle.hpp"
#include "squareice/orthopoly.hpp"

using namespace squareice;
using namespace squareice::numerics;

namespace {

Real pow10(int e) {
  Real out(1);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out *= 10;
  return e >= 0 ? out : 1 / out;
}

}  // namespace

TEST_CASE("vertex delta") {
  const PrecisionGuard guard(40);
  const Real one(1);
  CHECK(abs(vertex_delta(one, one, one) - Real(1) / 2) < pow10(-35));
  CHECK(abs(vertex_delta(one, one, sqrt(Real(2)))) < pow10(-35));
  CHECK(abs(vertex_delta(one, one, sqrt(Real(3))) + Real(1) / 2) < pow10(-35));
  CHECK_THROWS_AS(vertex_delta(Real(-1), one, one), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params_from_strings("0.2", "0.5", 30), std::invalid_argument);  // lambda < eta
  CHECK_THROWS_AS(params_from_strings("3.0", "0.5", 30), std::invalid_argument);  // lambda > pi - eta
  CHECK_THROWS_AS(params_from_strings("1.5", "1.6", 30), std::invalid_argument);  // eta > pi/2
  CHECK_THROWS_AS(params_from_strings("1.5", "0.5", 5), std::invalid_argument);   // too few digits
  CHECK_THROWS_AS(params_for_weight_x(Rational(5), 30), std::invalid_argument);
  CHECK_NOTHROW(params_for_weight_x(Rational(2), 30));
}

TEST_CASE("zeroth moment equals the closed-form kernel value") {
  const unsigned digits = 35;
  const PrecisionGuard guard(digits + kGuardDigits);
  // Ice point: 2/sqrt(3).
  const auto ice = ice_params(digits);
  CHECK(abs(moment(0, ice) - 2 / sqrt(Real(3))) < pow10(-static_cast<int>(digits) - 5));
  // Free-fermion style point (pi/2, pi/4): value 2.
  const auto ff = WeightParams{pi() / 2, pi() / 4, digits};
  CHECK(abs(moment(0, ff) - 2) < pow10(-static_cast<int>(digits) - 5));
  // Generic: quadrature against the closed form.
  for (const auto& [l, e] : std::vector<std::pair<const char*, const char*>>{{"1.2", "0.5"}, {"2.0", "0.8"}}) {
    const auto p = params_from_strings(l, e, digits);
    CHECK(abs(moment(0, p) - phi_value(p)) < pow10(-static_cast<int>(digits) - 5));
  }
  // Odd moments vanish on the symmetric line.
  const auto m = moments(ice, 7);
  for (int k = 1; k <= 7; k += 2) CHECK(abs(m[k]) < pow10(-static_cast<int>(digits) - 5));
}

TEST_CASE("moment reflection symmetry") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto p = params_from_strings("1.2", "0.4", digits);
  const WeightParams mirrored{pi() - p.lambda, p.eta, digits};
  const auto a = moments(p, 8);
  const auto b = moments(mirrored, 8);
  for (int k = 0; k <= 8; ++k) {
    const Real expected = k % 2 == 0 ? b[k] : -b[k];
    CHECK(abs(a[k] - expected) < pow10(-static_cast<int>(digits) - 5));
  }
}

TEST_CASE("partition function calibration") {
  const unsigned digits = 40;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto table = tabulate_moments(ice_params(digits), 10);
  const auto z1 = partition_hankel(1, table);
  CHECK(abs(z1.value - sqrt(Real(3)) / 2) < pow10(-35));
  const auto z2 = partition_hankel(2, table);
  CHECK(abs(z2.value - Real(9) / 8) < pow10(-35));
  for (int n = 1; n <= 6; ++n) {
    const auto z = partition_hankel(n, table);
    const Real exact = orthopoly::ice_partition(n).numeric();
    CHECK(abs(z.value - exact) / exact < pow10(-30));
    CHECK(z.pivot_ratio > 0);
  }
  CHECK_THROWS_AS(partition_hankel(11, table), std::invalid_argument);
  CHECK_THROWS_AS(partition_hankel(7, table), std::invalid_argument);  // table too short
}

TEST_CASE("partition function is crossing invariant") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto p = params_from_strings("1.9", "0.52", digits);
  const WeightParams mirrored{pi() - p.lambda, p.eta, digits};
  for (int n = 1; n <= 4; ++n) {
    const Real a = partition_hankel(n, p).value;
    const Real b = partition_hankel(n, mirrored).value;
    CHECK(abs(a - b) / abs(a) < pow10(-static_cast<int>(digits) + 8));
  }
}

TEST_CASE("weighted counts through the numeric pipeline") {
  // The partition function at lambda = pi/2, eta = arcsin(sqrt(x)/2) carries
  // the weighted enumeration: (1 - x/4)^(-n^2/2) x^(-n/2) Z_n.
  const unsigned digits = 35;
  const PrecisionGuard guard(digits + kGuardDigits);
  for (const auto& x : {Rational(2), Rational(3)}) {
    const auto p = params_for_weight_x(x, digits);
    const auto table = tabulate_moments(p, 8);
    const Real xr = to_real(x);
    for (int n = 1; n <= 5; ++n) {
      const Real z = partition_hankel(n, table).value;
      const Real scale = pow(1 - xr / 4, -Real(n) * n / 2) * pow(xr, -Real(n) / 2);
      const Real predicted = to_real(oracle::weighted_count(n, x));
      CHECK(abs(scale * z - predicted) / predicted < pow10(-25));
    }
  }
}

TEST_CASE("one-point correlator calibration") {
  const unsigned digits = 40;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto table = tabulate_moments(ice_params(digits), 10);
  const auto h2 = one_point_hankel_all(2, table);
  CHECK(abs(h2[0] - Real(1) / 2) < pow10(-30));
  CHECK(abs(h2[1] - Real(1) / 2) < pow10(-30));
  for (int n = 1; n <= 6; ++n) {
    const auto h = one_point_hankel_all(n, table);
    const auto exact = closedform::one_point_x1(n);
    Real sum(0);
    for (int r = 0; r < n; ++r) {
      CHECK(abs(h[r] - to_real(exact[r])) < pow10(-25));
      sum += h[r];
    }
    CHECK(abs(sum - 1) < pow10(-25));
  }
  CHECK_THROWS_AS(one_point_hankel(3, 4, ice_params(20)), std::invalid_argument);
}

TEST_CASE("two-point correlator calibration and marginals") {
  const unsigned digits = 35;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto table = tabulate_moments(ice_params(digits), 10);
  // Size 2 table is the exchange matrix over 2.
  CHECK(abs(two_point_hankel(2, 1, 1, table)) < pow10(-25));
  CHECK(abs(two_point_hankel(2, 1, 2, table) - Real(1) / 2) < pow10(-25));
  CHECK(abs(two_point_hankel(2, 2, 1, table) - Real(1) / 2) < pow10(-25));
  CHECK(abs(two_point_hankel(2, 2, 2, table)) < pow10(-25));

  for (int n = 2; n <= 4; ++n) {
    const auto exact = oracle::correlators(n, Rational(1));
    Real total(0);
    for (int r1 = 1; r1 <= n; ++r1)
      for (int r2 = 1; r2 <= n; ++r2) {
        const Real v = two_point_hankel(n, r1, r2, table);
        CHECK(abs(v - to_real(exact.two_point(r1 - 1, r2 - 1))) < pow10(-20));
        total += v;
      }
    CHECK(abs(total - 1) < pow10(-20));
  }

  // Marginals against the one-point determinant at a generic point. Summing
  // out the first row leaves the last-row law, which is the reflected
  // one-point table: flipping the lattice upside down exchanges the a and b
  // weights, so away from the symmetric line the two marginals differ by
  // r -> n - r + 1.
  const auto p = params_from_strings("1.4", "0.6", 30);
  const auto generic = tabulate_moments(p, 6);
  for (int n = 2; n <= 3; ++n) {
    const auto h = one_point_hankel_all(n, generic);
    for (int r1 = 1; r1 <= n; ++r1) {
      Real row(0), col(0);
      for (int r2 = 1; r2 <= n; ++r2) {
        row += two_point_hankel(n, r1, r2, generic);
        col += two_point_hankel(n, r2, r1, generic);
      }
      CHECK(abs(row - h[r1 - 1]) < pow10(-18));
      CHECK(abs(col - h[n - r1]) < pow10(-18));
    }
  }
  CHECK_THROWS_AS(two_point_hankel(1, 1, 1, table), std::invalid_argument);
}

TEST_CASE("two-point determinant matches the one-point composition at generic parameters") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits + kGuardDigits);
  const auto p = params_from_strings("1.4", "0.6", digits);
  const auto table = tabulate_moments(p, 8);
  for (int n = 2; n <= 4; ++n) {
    const auto hn = one_point_hankel_all(n, table);
    const auto hm = one_point_hankel_all(n - 1, table);
    const auto big = [&](long r) { return r >= 1 && r <= n ? hn[r - 1] : Real(0); };
    const auto small = [&](long r) { return r >= 1 && r <= n - 1 ? hm[r - 1] : Real(0); };
    for (long r1 = 1; r1 <= n; ++r1)
      for (long r2 = 1; r2 <= n; ++r2) {
        Real acc(0);
        for (long j = 1; j <= n; ++j) {
          acc += big(r1 - j + 1) * small(n - r2 + j);
          acc -= big(r1 - j) * small(n - r2 + j);
          acc -= small(r1 - j) * big(n - r2 + j + 1);
          acc += small(r1 - j) * big(n - r2 + j);
        }
        CHECK(abs(acc - two_point_hankel(n, static_cast<int>(r1), static_cast<int>(r2), table)) <
              pow10(-static_cast<int>(digits) + 5));
      }
  }
}

TEST_CASE("trigonometric composition of real jets") {
  const unsigned digits = 30;
  const PrecisionGuard guard(digits);
  const int k = 10;
  // sin(c + t(1 + t)) and cos of the same, against the shifted-series route
  // at t-linear order and the Pythagorean identity at all orders.
  const Real c = Real(1) / 3;
  Jet<Real> arg = Jet<Real>::constant(c, k) + Jet<Real>::variable(k) +
                  Jet<Real>::variable(k) * Jet<Real>::variable(k);
  const auto s = sin_of(arg), co = cos_of(arg);
  CHECK(abs(s.coeff(0) - sin(c)) < pow10(-25));
  CHECK(abs(s.coeff(1) - cos(c)) < pow10(-25));
  CHECK(abs(co.coeff(1) + sin(c)) < pow10(-25));
  const auto unit = s * s + co * co;
  CHECK(abs(unit.coeff(0) - 1) < pow10(-25));
  for (int i = 1; i <= k; ++i) CHECK(abs(unit.coeff(i)) < pow10(-25));
}

TEST_CASE("doubling the precision sharpens the calibration") {
  const auto low = tabulate_moments(ice_params(25), 6);
  const auto high = tabulate_moments(ice_params(50), 6);
  // Reference far above both working precisions.
  const PrecisionGuard guard(110);
  const Real exact = orthopoly::ice_partition(3).numeric();
  const Real err_low = abs(partition_hankel(3, low).value - exact) / exact;
  const Real err_high = abs(partition_hankel(3, high).value - exact) / exact;
  // Each run meets its own budget of digits + 10, and doubling the digits
  // gains at least fifteen orders.
  CHECK(err_low < pow10(-33));
  CHECK(err_high < pow10(-58));
  CHECK(err_high < err_low * pow10(-15));
}
