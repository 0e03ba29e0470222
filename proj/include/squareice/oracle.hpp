#pragma once

#include <vector>

#include "squareice/asm_grid.hpp"
#include "squareice/matrix.hpp"
#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"

namespace squareice::oracle {

// Ground truth by exhaustive enumeration. Everything here is exact and
// intended for n small enough to enumerate (n <= 7).

/// Boundary correlation data at a weight point x. one_point[r-1] is the
/// probability that the unique c-vertex of the first row sits at position r
/// counted from the right; two_point(r1-1, r2-1) pairs the first and last
/// rows; polarization holds the partial sums of one_point.
struct CorrelatorTable {
  int n = 0;
  std::vector<Rational> one_point;
  Matrix<Rational> two_point;
  std::vector<Rational> polarization;
};

/// Weighted count: each matrix weighted by x^(number of -1 entries).
Rational weighted_count(int n, const Rational& x);

/// Weighted counts refined by the row of the 1 in the last column (1-based).
std::vector<Rational> refined_counts(int n, const Rational& x);

/// Doubly refined: entry (r-1, s-1) counts matrices whose first column has
/// its 1 in row r and whose last column has its 1 in row s.
Matrix<Rational> doubly_refined_counts(int n, const Rational& x);

CorrelatorTable correlators(int n, const Rational& x);

/// Generating polynomial of the one-point table in the reflected ordering:
/// sum_r one_point[n-r] u^(r-1), degree n-1, value 1 at u = 1.
Poly<Rational> generating_one(int n, const Rational& x);

/// Bivariate generating polynomial; coefficient of u^(r-1) v^(s-1) is
/// two_point(n-r, s-1).
Poly2<Rational> generating_two(int n, const Rational& x);

/// The weight point reached by the rational crossing parameter q.
Rational x_of_q(const Rational& q);  // -(1-q)^2 / q

/// Normalized partially inhomogeneous partition function by direct summation
/// over configurations, one rational spectral variable per column. Exactly 1
/// at u = (1,...,1).
Rational inhomogeneous_partition(int n, const Rational& q, const std::vector<Rational>& u);

/// One-point generating polynomials for sizes 1..n at the same weight point.
std::vector<Poly<Rational>> generating_family(int n, const Rational& x);

}  // namespace squareice::oracle
