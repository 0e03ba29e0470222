#pragma once

#include <string>
#include <vector>

#include "squareice/matrix.hpp"
#include "squareice/numeric_types.hpp"

namespace squareice::numerics {

inline constexpr unsigned kGuardDigits = 15;
inline constexpr int kMaxSize = 10;  // cap for the numeric determinant pipeline

/// Spectral and crossing parameters in the disordered cone
/// 0 < eta < pi/2, eta < lambda < pi - eta, with a working precision.
struct WeightParams {
  Real lambda;
  Real eta;
  unsigned digits = kDefaultDigits;
};

void validate(const WeightParams& p);
WeightParams params_from_strings(const std::string& lambda, const std::string& eta, unsigned digits);
/// lambda = pi/2, eta = pi/6 (all vertex weights equal).
WeightParams ice_params(unsigned digits);
/// lambda = pi/2, eta = arcsin(sqrt(x)/2) for 0 < x < 4.
WeightParams params_for_weight_x(const Rational& x, unsigned digits);

/// (a^2 + b^2 - c^2) / (2ab).
Real vertex_delta(const Real& a, const Real& b, const Real& c);

/// sin(2 eta) / (sin(lambda - eta) sin(lambda + eta)); equals the zeroth
/// moment of the weight.
Real phi_value(const WeightParams& p);

/// The orthogonality weight exp(x (lambda - pi/2)) sinh(eta x)/sinh(pi x/2),
/// continuous at x = 0.
Real weight_kernel(const Real& x, const WeightParams& p);

/// Moments c_0..c_max of the weight by tanh-sinh quadrature on a truncated
/// interval, the truncation chosen from the analytic tail bound.
std::vector<Real> moments(const WeightParams& p, int max_order);
Real moment(int n, const WeightParams& p);

/// Moments plus their parameters, so determinant evaluations can share one
/// quadrature pass.
struct MomentTable {
  WeightParams params;
  std::vector<Real> c;
};
MomentTable tabulate_moments(const WeightParams& p, int max_order);

struct HankelResult {
  int n = 0;
  Real value;
  Real pivot_ratio;  // min |pivot| / max |pivot| of the eliminated moment matrix
};

/// Partition function via the Hankel determinant of moments:
/// [sin(lambda-eta) sin(lambda+eta)]^(n^2) / prod (k!)^2 * det [c_{j+k}].
HankelResult partition_hankel(int n, const MomentTable& table);
HankelResult partition_hankel(int n, const WeightParams& p);

/// One-point boundary correlator via the bordered moment determinant whose
/// last column holds jet derivatives of the boundary kernel.
std::vector<Real> one_point_hankel_all(int n, const MomentTable& table);
Real one_point_hankel(int n, int r, const WeightParams& p);

/// Two-point boundary correlator via the doubly bordered determinant with
/// two jet-derivative columns expanded by Laplace over the border.
Real two_point_hankel(int n, int r1, int r2, const MomentTable& table);
Real two_point_hankel(int n, int r1, int r2, const WeightParams& p);

}  // namespace squareice::numerics
