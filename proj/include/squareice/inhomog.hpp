#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"

namespace squareice::inhomog {

/// A partially inhomogeneous evaluation request: k of the n column variables
/// carry pairwise distinct rational values, the rest sit at 1; the one-point
/// generating polynomials are built at the weight point x.
struct InhomSpec {
  int n = 0;
  int k = 0;
  std::vector<Rational> u;  // size k, pairwise distinct
  Rational x;

  void validate() const;
};

/// family[i] must be the one-point generating polynomial of size n-k+1+i,
/// i = 0..k-1 (each of degree size-1 and value 1 at u = 1).
using GeneratingFamily = std::vector<Poly<Rational>>;

/// Builds the family from the exhaustive oracle (n <= 7).
GeneratingFamily family_from_oracle(const InhomSpec& spec);

/// The determinant representation of the normalized partition function:
/// det[ u_j^(k-1-i) (u_j - 1)^i H_{n-k+1+i}(u_j) ] / Vandermonde(u_1..u_k).
Rational determinant_value(const InhomSpec& spec, const GeneratingFamily& family);

/// Same determinant with the last variable left symbolic, returned as the
/// exact polynomial in that variable (the Vandermonde is divided out, so the
/// substitution u_k -> 1 needs no limit).
Poly<Rational> last_variable_polynomial(const InhomSpec& spec, const GeneratingFamily& family);

/// Exact check that sending the last variable to 1 collapses the k-variable
/// determinant onto the (k-1)-variable one.
bool collapse_check(const InhomSpec& spec, const GeneratingFamily& family);

/// Exact check of the recursion at u_k = 0: the value picks up a factor
/// H_n(0) and drops to size n-1.
bool korepin_check(const InhomSpec& spec);

struct OracleComparison {
  bool ok = true;
  std::string detail;  // first mismatching tuple when not ok
};

/// Compares the determinant against the direct configuration sum at
/// x = -(1-q)^2/q for `tuples` random distinct rational tuples (seeded).
OracleComparison matches_oracle(int n, const Rational& q, int k, int tuples, std::uint64_t seed);

/// Deterministic pseudo-random pairwise distinct rationals, nonzero and != 1.
std::vector<Rational> random_rationals(int count, std::uint64_t seed);

}  // namespace squareice::inhomog
