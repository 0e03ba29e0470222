#pragma once

#include <string>
#include <vector>

#include "squareice/gaussian_rational.hpp"
#include "squareice/matrix.hpp"
#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"
#include "squareice/root3.hpp"

namespace squareice::numerics {
struct WeightParams;  // quadrature-side parameters, see numerics.hpp
}

namespace squareice::orthopoly {

/// Moments c_0..c_max of an orthogonality weight, exact or numeric.
template <class F>
struct MomentSeq {
  std::vector<F> c;
  std::string provenance;
};

/// A finite family of orthogonal polynomials with leading coefficients and
/// squared norms. deg p[k] == k and p[k].leading() == kappa[k].
template <class F>
struct OrthoSystem {
  std::vector<Poly<F>> p;
  std::vector<F> kappa;
  std::vector<F> h;
  std::string weight;  // descriptor tag

  int max_degree() const { return static_cast<int>(p.size()) - 1; }
};

/// Hankel determinant of the moment matrix from norms alone:
/// D_n = prod_{k<=n} h_k / kappa_k^2.
template <class F>
F hankel_from_norms(const OrthoSystem<F>& sys, int n) {
  if (n < 0 || n > sys.max_degree()) throw std::invalid_argument("hankel_from_norms: degree out of range");
  F out(1);
  for (int k = 0; k <= n; ++k) out = out * sys.h[k] / (sys.kappa[k] * sys.kappa[k]);
  return out;
}

/// Linear moment functional applied to a polynomial (and products thereof).
template <class F>
F apply_moments(const MomentSeq<F>& moments, const Poly<F>& p) {
  if (p.is_zero()) return F(0);
  if (*p.degree() >= static_cast<int>(moments.c.size()))
    throw std::invalid_argument("apply_moments: not enough moments");
  F out(0);
  for (int i = 0; i <= *p.degree(); ++i) out += p.coeff(i) * moments.c[i];
  return out;
}

/// Monic orthogonal family from moments via the three-term recursion
/// p_{k+1} = (x - a_k) p_k - b_k p_{k-1}. Needs moments up to order
/// 2*max_degree + 1. Throws std::domain_error on a singular Hankel minor
/// (vanishing norm).
template <class F>
OrthoSystem<F> system_from_moments(const MomentSeq<F>& moments, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("system_from_moments: negative degree");
  if (static_cast<int>(moments.c.size()) < 2 * max_degree + 2)
    throw std::invalid_argument("system_from_moments: not enough moments");
  OrthoSystem<F> sys;
  sys.weight = moments.provenance;
  const Poly<F> x = Poly<F>::variable();
  Poly<F> prev;                 // p_{k-1}
  Poly<F> cur{F(1)};            // p_k
  F h_prev(0), h_cur = moments.c[0];
  if (h_cur == F(0)) throw std::domain_error("system_from_moments: singular Hankel minor");
  for (int k = 0; k <= max_degree; ++k) {
    sys.p.push_back(cur);
    sys.kappa.push_back(F(1));
    sys.h.push_back(h_cur);
    if (k == max_degree) break;
    const F a = apply_moments(moments, x * cur * cur) / h_cur;
    Poly<F> next = (x - Poly<F>(a)) * cur;
    if (k > 0) next -= (h_cur / h_prev) * prev;
    const F h_next = apply_moments(moments, next * next);
    if (h_next == F(0)) throw std::domain_error("system_from_moments: singular Hankel minor");
    prev = cur;
    cur = next;
    h_prev = h_cur;
    h_cur = h_next;
  }
  return sys;
}

/// The ice-point orthogonal polynomial of degree n, expanded exactly. The
/// construction runs through Q(i); all imaginary parts must cancel, and the
/// leading coefficient equals (2n)!/(6^n (n!)^2).
Poly<Rational> ice_polynomial(int n);

/// Exact norm data at the ice point. h_n = h_sqrt3 / sqrt(3) with
/// h_sqrt3 = 2 (3n+1)! / ((2n+1) 3^(3n) n!); kappa_n = (2n)!/(6^n (n!)^2).
struct IceNorm {
  Rational h_sqrt3;  // h_n times sqrt(3)
  Rational kappa;

  Root3 h() const { return Root3(Rational(0), h_sqrt3 / 3); }  // h_sqrt3/sqrt(3)
};
IceNorm ice_norm(int n);

/// Exact moments of the ice-point weight divided by sqrt(3); obtained from
/// the Taylor expansion of the spectral-parameter kernel, whose derivatives
/// are the moments.
MomentSeq<Rational> ice_moments_over_sqrt3(int max_order);

/// Exact ice-point family in the hypergeometric normalization (leading
/// coefficients (2n)!/(6^n (n!)^2)). h entries are the norms for the weight
/// divided by sqrt(3), which makes them rational.
OrthoSystem<Rational> ice_system(int max_degree);

/// Ice-point partition function: (sqrt(3)/2)^(n^2) times an integer that
/// equals the total number of alternating sign matrices.
struct IcePartition {
  int n = 0;
  Int rational_factor;
  Root3 value() const;
  Real numeric() const { return value().numeric(); }
};
IcePartition ice_partition(int n);

/// Residual of the finite-difference equation satisfied by the ice-point
/// polynomial of degree n-1; the zero polynomial when the equation holds.
Poly<GaussianRational> ice_difference_residual(int n);
bool ice_difference_check(int n);

/// One-point boundary correlator at the ice point through the differential
/// operator form, evaluated with exact jets over Q(sqrt 3) and normalized to
/// total weight 1. Returns rational values.
std::vector<Rational> ice_one_point_operator(int n);

/// Same correlator at generic parameters with numeric jets.
std::vector<Real> one_point_operator(int n, const numerics::WeightParams& params);

/// Coefficientwise reflection symmetry of the monic families built at
/// (lambda, eta) and (pi - lambda, eta), plus invariance of the norms.
/// Returns the largest violation seen up to max_degree.
Real crossing_defect(int max_degree, const numerics::WeightParams& params);

}  // namespace squareice::orthopoly
