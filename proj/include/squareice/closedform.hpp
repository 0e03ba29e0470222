#pragma once

#include <vector>

#include "squareice/matrix.hpp"
#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"

namespace squareice::closedform {

/// Total number of n x n alternating sign matrices,
/// prod_k (3k-2)!(k-1)! / ((2k-1)!(2k-2)!); both product forms are evaluated
/// and must agree.
Int total_count(int n);

/// One-point boundary correlator at the ice point (weight 1):
/// H^(r) = C(n+r-2, n-1) C(2n-1-r, n-1) / C(3n-2, n-1).
std::vector<Rational> one_point_x1(int n);

/// The same table as the coefficients of the hypergeometric generating
/// polynomial, degree n-1, normalized so the value at 1 is 1.
Poly<Rational> generating_x1(int n);

/// The same table again, as the normalized solution of the first-order
/// recurrence r(r-2n+1) H^(r+1) = (r-n)(n+r-1) H^(r).
std::vector<Rational> one_point_x1_recurrence(int n);

/// Coefficients B(m, j) of the weight-3 refined tables; zero outside
/// 0 <= j <= 2m, symmetric under j -> 2m - j.
Rational three_enumeration_b(long m, long j);

/// One-point correlator at weight 3 (n >= 2), built from three_enumeration_b
/// with separate even/odd assembly.
std::vector<Rational> one_point_x3(int n);

/// Two-point table from the one-point tables of sizes n and n-1 via the
/// four-term convolution identity; out-of-range entries count as zero.
Matrix<Rational> two_point_from_one(const std::vector<Rational>& h_n,
                                    const std::vector<Rational>& h_nm1);

/// Bivariate generating polynomial from the univariate ones of sizes n and
/// n-1: [u H_{n-1}(u) (v-1) H_n(v) - v H_{n-1}(v) (u-1) H_n(u)] / (v - u),
/// with the division performed exactly.
Poly2<Rational> generating_two_from_one(const Poly<Rational>& h_n, const Poly<Rational>& h_nm1);

/// Boundary polarization: partial sums of the one-point table.
std::vector<Rational> polarization_from(const std::vector<Rational>& one_point);

}  // namespace squareice::closedform
