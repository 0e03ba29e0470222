#include "squareice/numerics.hpp"

#include <stdexcept>

#include "squareice/combinatorics.hpp"
#include "squareice/jet.hpp"

namespace squareice::numerics {

void validate(const WeightParams& p) {
  const Real half_pi = pi() / 2;
  if (!(p.eta > 0 && p.eta < half_pi))
    throw std::invalid_argument("weight parameters: eta must lie in (0, pi/2)");
  if (!(p.lambda > p.eta && p.lambda < 2 * half_pi - p.eta))
    throw std::invalid_argument("weight parameters: lambda must lie in (eta, pi - eta)");
  if (p.digits < 10) throw std::invalid_argument("weight parameters: need at least 10 digits");
}

WeightParams params_from_strings(const std::string& lambda, const std::string& eta, unsigned digits) {
  const PrecisionGuard guard(digits + kGuardDigits);
  WeightParams p{Real(lambda), Real(eta), digits};
  validate(p);
  return p;
}

WeightParams ice_params(unsigned digits) {
  const PrecisionGuard guard(digits + kGuardDigits);
  WeightParams p{pi() / 2, pi() / 6, digits};
  validate(p);
  return p;
}

WeightParams params_for_weight_x(const Rational& x, unsigned digits) {
  if (!(x > 0 && x < 4)) throw std::invalid_argument("params_for_weight_x: x must lie in (0, 4)");
  const PrecisionGuard guard(digits + kGuardDigits);
  WeightParams p{pi() / 2, asin(sqrt(to_real(x)) / 2), digits};
  validate(p);
  return p;
}

Real vertex_delta(const Real& a, const Real& b, const Real& c) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("vertex_delta: a and b must be positive");
  return (a * a + b * b - c * c) / (2 * a * b);
}

Real phi_value(const WeightParams& p) {
  const PrecisionGuard guard(p.digits + kGuardDigits);
  return sin(2 * p.eta) / (sin(p.lambda - p.eta) * sin(p.lambda + p.eta));
}

Real weight_kernel(const Real& x, const WeightParams& p) {
  if (x == 0) return 2 * p.eta / pi();
  return exp(x * (p.lambda - pi() / 2)) * sinh(p.eta * x) / sinh(pi() * x / 2);
}

namespace {

// Truncation point: |integrand| decays like exp(-alpha |x|) with
// alpha = min(pi - lambda - eta, lambda - eta); pick T so the bound times
// x^max_order stays below the tail budget.
Real truncation_point(const WeightParams& p, int max_order, const Real& log_tail) {
  const Real alpha = [&] {
    const Real right = pi() - p.lambda - p.eta;
    const Real left = p.lambda - p.eta;
    return right < left ? right : left;
  }();
  Real t = (log_tail + 2) / alpha;
  for (int it = 0; it < 4; ++it) t = (log_tail + 2 + max_order * log(t)) / alpha;
  return t;
}

}  // namespace

std::vector<Real> moments(const WeightParams& p, int max_order) {
  validate(p);
  // Extra internal guard so the node-summation noise sits well below the
  // convergence target of digits + 10.
  const unsigned work_digits = p.digits + kGuardDigits + 10;
  const PrecisionGuard guard(work_digits);
  const Real ln10 = log(Real(10));
  const Real tol = exp(-ln10 * Real(static_cast<int>(p.digits) + 10));
  const Real log_tail = ln10 * Real(static_cast<int>(work_digits));
  const Real t_cut = truncation_point(p, max_order, log_tail);
  const Real half_pi = pi() / 2;

  // tanh-sinh on [-T, T]: x = T tanh((pi/2) sinh t); the transformed sum is a
  // trapezoid over t, refined by halving h until two sweeps agree.
  const Real t_max = asinh(2 * (log_tail + 5) / pi()) + 1;
  std::vector<Real> sums(max_order + 1, Real(0));

  const auto accumulate = [&](const Real& t, std::vector<Real>& into) {
    const Real s = half_pi * sinh(t);
    const Real ch = cosh(s);
    const Real x = t_cut * tanh(s);
    const Real w = t_cut * half_pi * cosh(t) / (ch * ch);
    Real f = weight_kernel(x, p) * w;
    for (int k = 0; k <= max_order; ++k) {
      into[k] += f;
      f *= x;
    }
  };

  Real h(1);
  // Level 0: nodes at every integer in [-t_max, t_max].
  accumulate(Real(0), sums);
  for (long i = 1; to_real(Int(i)) <= t_max; ++i) {
    accumulate(Real(i), sums);
    accumulate(Real(-i), sums);
  }
  std::vector<Real> prev_result(max_order + 1, Real(0));
  for (int k = 0; k <= max_order; ++k) prev_result[k] = sums[k] * h;

  constexpr int kMaxLevel = 14;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    // New nodes: odd multiples of h.
    std::vector<Real> fresh(max_order + 1, Real(0));
    for (long i = 1; h * to_real(Int(i)) <= t_max; i += 2) {
      accumulate(h * to_real(Int(i)), fresh);
      accumulate(-h * to_real(Int(i)), fresh);
    }
    for (int k = 0; k <= max_order; ++k) sums[k] += fresh[k];
    std::vector<Real> result(max_order + 1, Real(0));
    for (int k = 0; k <= max_order; ++k) result[k] = sums[k] * h;

    Real worst(0);
    for (int k = 0; k <= max_order; ++k) {
      const Real scale = 1 + abs(result[k]);
      const Real d = abs(result[k] - prev_result[k]) / scale;
      if (d > worst) worst = d;
    }
    prev_result = result;
    if (level >= 5 && worst < tol) break;
    if (level == kMaxLevel) throw std::runtime_error("moments: quadrature did not converge");
  }
  return prev_result;
}

Real moment(int n, const WeightParams& p) {
  if (n < 0) throw std::invalid_argument("moment: negative order");
  return moments(p, n)[n];
}

MomentTable tabulate_moments(const WeightParams& p, int max_order) {
  return MomentTable{p, moments(p, max_order)};
}

namespace {

void check_size(int n, int needed_moments, const MomentTable& table) {
  if (n < 1) throw std::invalid_argument("hankel: size must be positive");
  if (n > kMaxSize) throw std::invalid_argument("hankel: size exceeds the numeric pipeline cap");
  if (static_cast<int>(table.c.size()) < needed_moments)
    throw std::invalid_argument("hankel: moment table too short");
}

Matrix<Real> moment_matrix(int n, const MomentTable& table) {
  Matrix<Real> m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = table.c[j + k];
  return m;
}

}  // namespace

HankelResult partition_hankel(int n, const MomentTable& table) {
  check_size(n, 2 * n - 1, table);
  const WeightParams& p = table.params;
  const PrecisionGuard guard(p.digits + kGuardDigits);
  const LuResult det = det_lu(moment_matrix(n, table));
  Real front = 1;
  const Real ab = sin(p.lambda - p.eta) * sin(p.lambda + p.eta);
  for (long i = 0; i < static_cast<long>(n) * n; ++i) front *= ab;
  for (long k = 1; k <= n - 1; ++k) {
    const Real f = to_real(factorial(k));
    front /= f * f;
  }
  return HankelResult{n, front * det.value, det.pivot_ratio};
}

HankelResult partition_hankel(int n, const WeightParams& p) {
  return partition_hankel(n, tabulate_moments(p, 2 * n - 2));
}

std::vector<Real> one_point_hankel_all(int n, const MomentTable& table) {
  check_size(n, 2 * n - 1, table);
  const WeightParams& p = table.params;
  const PrecisionGuard guard(p.digits + kGuardDigits);
  const int order = n + 2;
  using J = Jet<Real>;
  const J sin_eps = J::sin_series(order);
  const J sin_m2eta = J::sin_shifted(sin(-2 * p.eta), cos(-2 * p.eta), order);
  const J sin_lme = J::sin_shifted(sin(p.lambda - p.eta), cos(p.lambda - p.eta), order);
  const J den = sin_lme.pow(n - 1);

  const Real a = sin(p.lambda + p.eta), b = sin(p.lambda - p.eta), c = sin(2 * p.eta);
  const Real det_phi = det_lu(moment_matrix(n, table)).value;
  const Real nfac = to_real(factorial(n - 1));

  std::vector<Real> out(n);
  for (int r = 1; r <= n; ++r) {
    const J border = sin_eps.pow(n - r) * sin_m2eta.pow(r - 1) / den;
    Matrix<Real> psi = moment_matrix(n, table);
    for (int j = 0; j < n; ++j) psi(j, n - 1) = border.derivative(j);
    Real front = nfac * c;
    for (int i = 0; i < r; ++i) front /= a;
    for (int i = 0; i < n - r + 1; ++i) front /= b;
    out[r - 1] = front * det_lu(psi).value / det_phi;
  }
  return out;
}

Real one_point_hankel(int n, int r, const WeightParams& p) {
  if (r < 1 || r > n) throw std::invalid_argument("one_point_hankel: position out of range");
  return one_point_hankel_all(n, tabulate_moments(p, 2 * n - 2))[r - 1];
}

Real two_point_hankel(int n, int r1, int r2, const MomentTable& table) {
  check_size(n, 2 * n - 1, table);
  if (n < 2) throw std::invalid_argument("two_point_hankel: needs size >= 2");
  if (r1 < 1 || r1 > n || r2 < 1 || r2 > n)
    throw std::invalid_argument("two_point_hankel: position out of range");
  const WeightParams& p = table.params;
  const PrecisionGuard guard(p.digits + kGuardDigits);
  const int order = 2 * n;
  using J2 = Jet2<Real>;
  const auto lift1 = [&](const Jet<Real>& f) { return J2::lift1(f, order); };
  const auto lift2 = [&](const Jet<Real>& f) { return J2::lift2(f, order); };
  const Jet<Real> sin_u = Jet<Real>::sin_series(order);
  const Jet<Real> cos_u = Jet<Real>::cos_series(order);
  const Real eta = p.eta, lambda = p.lambda;

  const J2 sin1 = lift1(sin_u), cos1 = lift1(cos_u);
  const J2 sin2 = lift2(sin_u), cos2 = lift2(cos_u);
  const J2 numer = sin1.pow(n - r1) *
                   lift1(Jet<Real>::sin_shifted(sin(-2 * eta), cos(-2 * eta), order)).pow(r1 - 1) *
                   sin2.pow(n - r2) *
                   lift2(Jet<Real>::sin_shifted(sin(2 * eta), cos(2 * eta), order)).pow(r2 - 1);
  // sin(eps2 - eps1 + 2 eta) expanded through the two angle sums.
  const J2 cross = sin(2 * eta) * (cos1 * cos2 + sin1 * sin2) + cos(2 * eta) * (sin2 * cos1 - cos2 * sin1);
  const J2 den = cross *
                 lift1(Jet<Real>::sin_shifted(sin(lambda - eta), cos(lambda - eta), order)).pow(n - 2) *
                 lift2(Jet<Real>::sin_shifted(sin(lambda + eta), cos(lambda + eta), order)).pow(n - 2);
  const J2 kernel = numer / den;

  const Matrix<Real> phi = moment_matrix(n, table);
  Real border_det(0);
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = j1 + 1; j2 < n; ++j2) {
      // 2x2 block of the last two columns (d/d eps2 column first).
      const Real block = kernel.derivative(j2, j1) - kernel.derivative(j1, j2);
      if (block == 0) continue;
      const Real minor = det_lu(minor_excluding(phi, j1, j2, n - 2)).value;
      const int sign = (j1 + j2 + 2 * n - 3) % 2 == 0 ? 1 : -1;
      border_det += sign * block * minor;
    }

  const Real a = sin(lambda + eta), b = sin(lambda - eta), c = sin(2 * eta);
  Real front = to_real(factorial(n - 1) * factorial(n - 2)) * c * c;
  for (int i = 0; i < n + r1 - r2 + 1; ++i) front /= a;
  for (int i = 0; i < n + r2 - r1 + 1; ++i) front /= b;
  return front * border_det / det_lu(phi).value;
}

Real two_point_hankel(int n, int r1, int r2, const WeightParams& p) {
  return two_point_hankel(n, r1, r2, tabulate_moments(p, 2 * n - 2));
}

}  // namespace squareice::numerics
