#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squareice/closedform.hpp"
#include "squareice/inhomog.hpp"
#include "squareice/oracle.hpp"

using namespace squareice;
using oracle::correlators;
using oracle::weighted_count;

TEST_CASE("weighted counts") {
  CHECK(weighted_count(3, Rational(1)) == 7);
  CHECK(weighted_count(4, Rational(2)) == 64);
  CHECK(weighted_count(4, Rational(3)) == 90);
  // A(3; x) = 6 + x as a polynomial: two evaluations pin the line through
  // the permutation count.
  for (const auto& x : {Rational(5, 7), Rational(-3, 2)}) CHECK(weighted_count(3, x) == 6 + x);
  CHECK(weighted_count(4, Rational(0)) == 24);  // permutations only
  CHECK_THROWS_AS(weighted_count(8, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(weighted_count(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("refined counts") {
  const auto r3 = oracle::refined_counts(3, Rational(1));
  CHECK(r3 == std::vector<Rational>{Rational(2), Rational(3), Rational(2)});

  // Weight 0 keeps the permutation matrices: (n-1)! in every slot.
  for (int n = 2; n <= 5; ++n) {
    const auto r = oracle::refined_counts(n, Rational(0));
    Rational expected(1);
    for (long k = 2; k <= n - 1; ++k) expected *= k;
    for (const auto& v : r) CHECK(v == expected);
  }

  CHECK(oracle::refined_counts(4, Rational(3)) ==
        std::vector<Rational>{Rational(9), Rational(36), Rational(36), Rational(9)});
}

TEST_CASE("doubly refined counts") {
  for (const auto& x : {Rational(1), Rational(5, 7)}) {
    const auto d2 = oracle::doubly_refined_counts(2, x);
    CHECK(d2(0, 0) == 0);
    CHECK(d2(0, 1) == 1);
    CHECK(d2(1, 0) == 1);
    CHECK(d2(1, 1) == 0);
  }

  // Marginals reproduce the refined counts; the total reproduces the count.
  for (int n = 2; n <= 5; ++n)
    for (const auto& x : {Rational(1), Rational(3)}) {
      const auto d = oracle::doubly_refined_counts(n, x);
      const auto first_col = oracle::refined_counts(n, x);  // also the first-column law
      Rational total(0);
      for (int r = 0; r < n; ++r) {
        Rational row_sum(0), col_sum(0);
        for (int s = 0; s < n; ++s) {
          row_sum += d(r, s);
          col_sum += d(s, r);
          total += d(r, s);
        }
        CHECK(row_sum == first_col[r]);
        CHECK(col_sum == first_col[r]);
      }
      CHECK(total == weighted_count(n, x));
    }
}

TEST_CASE("correlator tables") {
  const auto t3 = correlators(3, Rational(1));
  CHECK(t3.one_point == std::vector<Rational>{Rational(2, 7), Rational(3, 7), Rational(2, 7)});
  CHECK(t3.polarization == std::vector<Rational>{Rational(2, 7), Rational(5, 7), Rational(1)});

  const auto t43 = correlators(4, Rational(3));
  CHECK(t43.one_point ==
        std::vector<Rational>{Rational(1, 10), Rational(2, 5), Rational(2, 5), Rational(1, 10)});

  for (int n = 1; n <= 5; ++n)
    for (const auto& x : {Rational(1), Rational(2), Rational(3), Rational(5, 7)}) {
      const auto t = correlators(n, x);
      Rational sum(0);
      for (const auto& v : t.one_point) sum += v;
      CHECK(sum == 1);
      // Palindromic symmetry of the one-point table.
      for (int r = 0; r < n; ++r) CHECK(t.one_point[r] == t.one_point[n - 1 - r]);
      // Two-point marginals collapse onto the one-point table.
      for (int r = 0; r < n; ++r) {
        Rational row(0), col(0);
        for (int s = 0; s < n; ++s) {
          row += t.two_point(r, s);
          col += t.two_point(s, r);
        }
        CHECK(row == t.one_point[r]);
        CHECK(col == t.one_point[r]);
      }
      CHECK(t.polarization[n - 1] == 1);
    }
}

TEST_CASE("doubly refined counts match the two-point table through the transpose bridge") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& x : {Rational(1), Rational(3)}) {
      const auto d = oracle::doubly_refined_counts(n, x);
      const auto t = correlators(n, x);
      const Rational total = weighted_count(n, x);
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          CHECK(d(r - 1, s - 1) == total * t.two_point(n - r, n - s));
    }
}

TEST_CASE("generating polynomials") {
  for (const auto& x : {Rational(1), Rational(5, 7)}) {
    const auto g2 = oracle::generating_one(2, x);
    CHECK(g2 == Poly<Rational>(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  }
  CHECK(oracle::generating_one(3, Rational(1)) ==
        Poly<Rational>(std::vector<Rational>{Rational(2, 7), Rational(3, 7), Rational(2, 7)}));

  for (int n = 1; n <= 5; ++n)
    for (const auto& x : {Rational(1), Rational(3)}) {
      CHECK(oracle::generating_one(n, x)(Rational(1)) == 1);
      const auto g = oracle::generating_two(n, x);
      CHECK(g(Rational(1), Rational(1)) == 1);
      // Setting the first variable to 1 leaves the one-variable polynomial.
      CHECK(g.eval_u(Rational(1)) == oracle::generating_one(n, x));
    }

  // n = 2 bivariate polynomial is (1 + uv)/2.
  const auto g2 = oracle::generating_two(2, Rational(1));
  CHECK(g2.coeff(0, 0) == Rational(1, 2));
  CHECK(g2.coeff(1, 1) == Rational(1, 2));
  CHECK(g2.coeff(1, 0) == 0);
  CHECK(g2.coeff(0, 1) == 0);
}

TEST_CASE("inhomogeneous configuration sum") {
  CHECK(oracle::x_of_q(Rational(2)) == Rational(-1, 2));
  CHECK(oracle::x_of_q(Rational(1, 2)) == Rational(-1, 2));
  CHECK(oracle::x_of_q(Rational(-2)) == Rational(9, 2));
  CHECK_THROWS_AS(oracle::x_of_q(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(oracle::x_of_q(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(oracle::x_of_q(Rational(-1)), std::invalid_argument);

  // Homogeneous normalization.
  for (int n = 1; n <= 5; ++n)
    for (const auto& q : {Rational(2), Rational(3), Rational(-2), Rational(1, 2)})
      CHECK(oracle::inhomogeneous_partition(n, q, std::vector<Rational>(n, Rational(1))) == 1);

  // n = 2 closed form (1 + u1 u2)/2.
  for (const auto& q : {Rational(2), Rational(-3)}) {
    const Rational u1(3, 4), u2(-5, 2);
    CHECK(oracle::inhomogeneous_partition(2, q, {u1, u2}) == (1 + u1 * u2) / 2);
  }

  // One inhomogeneity reproduces the generating polynomial at x(q); this
  // validates the derived per-column weight reduction.
  for (int n = 2; n <= 5; ++n)
    for (const auto& q : {Rational(2), Rational(3), Rational(1, 2)}) {
      const auto gen = oracle::generating_one(n, oracle::x_of_q(q));
      for (const auto& u : inhomog::random_rationals(3, 42 + n)) {
        std::vector<Rational> vars(n, Rational(1));
        vars[0] = u;
        CHECK(oracle::inhomogeneous_partition(n, q, vars) == gen(u));
        // The sum is symmetric in the variables: move the value elsewhere.
        std::vector<Rational> moved(n, Rational(1));
        moved[n - 1] = u;
        CHECK(oracle::inhomogeneous_partition(n, q, moved) == gen(u));
      }
    }

  CHECK_THROWS_AS(oracle::inhomogeneous_partition(2, Rational(2), {Rational(1)}), std::invalid_argument);
}
