#include "squareice/orthopoly.hpp"

#include <stdexcept>

#include "squareice/combinatorics.hpp"
#include "squareice/jet.hpp"
#include "squareice/numerics.hpp"

namespace squareice::orthopoly {

Poly<Rational> ice_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("ice_polynomial: negative degree");
  using G = GaussianRational;
  using PG = Poly<G>;
  // i^n (2/3)_n 3F2(-n, n+1, 1/3 + i x/6; 2/3, 1; 1) with the third upper
  // parameter a degree-one polynomial; lower parameters never vanish.
  PG sum{G(Rational(1))};
  PG term{G(Rational(1))};
  for (long k = 0; k < n; ++k) {
    const G scalar = G(Rational(-n + k)) * G(Rational(n + 1 + k)) /
                     (G(Rational(2, 3) + k) * G(Rational(1 + k)) * G(Rational(k + 1)));
    const PG upper(std::vector<G>{G(Rational(1, 3) + k), G(Rational(0), Rational(1, 6))});
    term = term * upper * PG(scalar);
    sum += term;
  }
  G front(Rational(1));
  for (int k = 0; k < n % 4; ++k) front *= G::i();  // i^n
  front *= G(pochhammer(Rational(2, 3), n));
  sum = sum * PG(front);

  std::vector<Rational> real_coeffs;
  real_coeffs.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const G c = sum.coeff(k);
    if (!c.is_real())
      throw std::logic_error("ice_polynomial: imaginary part survived the expansion");
    real_coeffs.push_back(c.re);
  }
  Poly<Rational> out{std::vector<Rational>(real_coeffs)};
  if (out.is_zero() || *out.degree() != n || out.leading() != ice_norm(n).kappa)
    throw std::logic_error("ice_polynomial: wrong degree or leading coefficient");
  return out;
}

IceNorm ice_norm(int n) {
  if (n < 0) throw std::invalid_argument("ice_norm: negative degree");
  Int pow3(1), pow6(1);
  for (int i = 0; i < 3 * n; ++i) pow3 *= 3;
  for (int i = 0; i < n; ++i) pow6 *= 6;
  IceNorm out;
  out.h_sqrt3 = Rational(2 * factorial(3 * n + 1)) / Rational(Int(2 * n + 1) * pow3 * factorial(n));
  out.kappa = Rational(factorial(2 * n)) / Rational(pow6 * factorial(n) * factorial(n));
  return out;
}

MomentSeq<Rational> ice_moments_over_sqrt3(int max_order) {
  if (max_order < 0) throw std::invalid_argument("ice_moments_over_sqrt3: negative order");
  // The generating kernel of the moments, expanded around the symmetric
  // point, is sqrt(3)/(cos(2t) + 1/2); dividing out sqrt(3) leaves a rational
  // series whose n-th derivative at 0 is the n-th moment over sqrt(3).
  Jet<Rational> cos2t(max_order);
  {
    Jet<Rational> c = Jet<Rational>::cos_series(max_order);
    Rational scale(1);
    std::vector<Rational> coeffs(max_order + 1, Rational(0));
    for (int i = 0; i <= max_order; ++i) {
      coeffs[i] = c.coeff(i) * scale;
      scale *= 2;
    }
    cos2t = Jet<Rational>::from_coeffs(std::move(coeffs));
  }
  const Jet<Rational> denom = cos2t + Jet<Rational>::constant(Rational(1, 2), max_order);
  const Jet<Rational> s = Jet<Rational>::constant(Rational(1), max_order) / denom;
  MomentSeq<Rational> m;
  m.provenance = "ice point, weight scaled by 1/sqrt(3)";
  m.c.reserve(max_order + 1);
  for (int k = 0; k <= max_order; ++k) m.c.push_back(s.derivative(k));
  return m;
}

OrthoSystem<Rational> ice_system(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("ice_system: negative degree");
  OrthoSystem<Rational> sys;
  sys.weight = "ice point (norms for the weight scaled by 1/sqrt(3))";
  for (int k = 0; k <= max_degree; ++k) {
    const IceNorm nk = ice_norm(k);
    sys.p.push_back(ice_polynomial(k));
    sys.kappa.push_back(nk.kappa);
    sys.h.push_back(nk.h_sqrt3 / 3);
  }
  return sys;
}

Root3 IcePartition::value() const {
  const long nn = static_cast<long>(n) * n;
  Int pow2(1);
  for (long i = 0; i < nn; ++i) pow2 *= 2;
  Int pow3(1);
  for (long i = 0; i < nn / 2; ++i) pow3 *= 3;
  const Rational base = Rational(rational_factor * pow3) / Rational(pow2);
  if (nn % 2 == 0) return Root3(base);
  return Root3(Rational(0), base);  // one leftover sqrt(3)
}

IcePartition ice_partition(int n) {
  if (n < 1) throw std::invalid_argument("ice_partition: size must be positive");
  Rational f(1);
  for (long k = 0; k < n; ++k)
    f *= Rational(factorial(3 * k + 1) * factorial(k)) / Rational(factorial(2 * k) * factorial(2 * k + 1));
  if (!is_integer(f)) throw std::logic_error("ice_partition: factor is not an integer");
  IcePartition out;
  out.n = n;
  out.rational_factor = numerator(f);
  return out;
}

Poly<GaussianRational> ice_difference_residual(int n) {
  if (n < 1) throw std::invalid_argument("ice_difference_residual: size must be positive");
  using G = GaussianRational;
  using PG = Poly<G>;
  const Poly<Rational> p_real = ice_polynomial(n - 1);
  std::vector<G> lifted;
  for (int k = 0; k <= *p_real.degree(); ++k) lifted.emplace_back(p_real.coeff(k));
  const PG p{std::vector<G>(lifted)};

  const G i6(Rational(0), Rational(1, 6));
  const PG x = PG::variable();
  const PG third{G(Rational(1, 3))}, two_thirds{G(Rational(2, 3))};
  const PG a_minus = (third - x * PG(i6)) * (two_thirds - x * PG(i6));
  const PG a_plus = (third + x * PG(i6)) * (two_thirds + x * PG(i6));
  const PG middle = x * x * PG(G(Rational(1, 18))) -
                    PG(G(Rational(4, 9) + Rational(static_cast<long>(n) * (n - 1))));
  const G six_i(Rational(0), Rational(6));
  return a_minus * p.composed_linear(G(Rational(1)), six_i) + middle * p +
         a_plus * p.composed_linear(G(Rational(1)), -six_i);
}

bool ice_difference_check(int n) { return ice_difference_residual(n).is_zero(); }

std::vector<Rational> ice_one_point_operator(int n) {
  if (n < 1) throw std::invalid_argument("ice_one_point_operator: size must be positive");
  using J = Jet<Root3>;
  const int order = n + 4;  // margin over the required n-1
  const Root3 half{Rational(1, 2)};
  const Root3 half_sqrt3{Rational(0), Rational(1, 2)};
  const J sin_eps = J::sin_series(order);
  const J sin_minus = J::sin_shifted(-half_sqrt3, half, order);  // sin(eps - pi/3)
  const J sin_plus = J::sin_shifted(half_sqrt3, half, order);    // sin(eps + pi/3)
  const J omega = sin_eps / sin_minus;
  const J rho = sin_minus / sin_plus;

  const Poly<Rational> p_real = ice_polynomial(n - 1);
  std::vector<Root3> lifted;
  for (int k = 0; k <= *p_real.degree(); ++k) lifted.emplace_back(p_real.coeff(k));
  const Poly<Root3> p{std::vector<Root3>(lifted)};

  std::vector<Root3> raw(n);
  const J rho_pow = rho.pow(n - 1);
  J omega_pow = J::constant(Root3(Rational(1)), order);
  for (int r = 1; r <= n; ++r) {
    raw[r - 1] = apply_derivative_poly(p, rho_pow * omega_pow);
    if (r < n) omega_pow *= omega;
  }
  Root3 total{Rational(0)};
  for (const auto& v : raw) total += v;
  if (total.is_zero()) throw std::logic_error("ice_one_point_operator: vanishing normalization");
  std::vector<Rational> out(n);
  for (int r = 0; r < n; ++r) {
    const Root3 v = raw[r] / total;
    if (!v.is_rational())
      throw std::logic_error("ice_one_point_operator: normalized value is not rational");
    out[r] = v.a;
  }
  return out;
}

std::vector<Real> one_point_operator(int n, const numerics::WeightParams& params) {
  if (n < 1) throw std::invalid_argument("one_point_operator: size must be positive");
  const PrecisionGuard guard(params.digits + numerics::kGuardDigits);
  const int order = n + 4;
  const Real lambda = params.lambda, eta = params.eta;
  const Real a = sin(lambda + eta), b = sin(lambda - eta), c = sin(2 * eta);
  using J = Jet<Real>;
  const J sin_eps = J::sin_series(order);
  const J sin_m2eta = J::sin_shifted(sin(-2 * eta), cos(-2 * eta), order);
  const J sin_lm = J::sin_shifted(sin(lambda - eta), cos(lambda - eta), order);
  const J omega = (a / b) * (sin_eps / sin_m2eta);
  const J rho = (b / c) * (sin_m2eta / sin_lm);

  const auto moments = numerics::moments(params, 2 * n);
  MomentSeq<Real> seq{moments, "numeric"};
  const auto sys = system_from_moments(seq, n - 1);
  const Poly<Real>& p = sys.p[n - 1];

  std::vector<Real> raw(n);
  const J rho_pow = rho.pow(n - 1);
  for (int r = 1; r <= n; ++r) raw[r - 1] = apply_derivative_poly(p, rho_pow * omega.pow(n - r));
  Real total(0);
  for (const auto& v : raw) total += v;
  for (auto& v : raw) v /= total;
  return raw;
}

Real crossing_defect(int max_degree, const numerics::WeightParams& params) {
  const PrecisionGuard guard(params.digits + numerics::kGuardDigits);
  const numerics::WeightParams mirrored{pi() - params.lambda, params.eta, params.digits};
  const auto m1 = numerics::moments(params, 2 * max_degree + 1);
  const auto m2 = numerics::moments(mirrored, 2 * max_degree + 1);
  const auto s1 = system_from_moments(MomentSeq<Real>{m1, "numeric"}, max_degree);
  const auto s2 = system_from_moments(MomentSeq<Real>{m2, "numeric"}, max_degree);
  Real worst(0);
  for (int k = 0; k <= max_degree; ++k) {
    for (int m = 0; m <= k; ++m) {
      const int sign = (k - m) % 2 == 0 ? 1 : -1;
      const Real d = abs(s1.p[k].coeff(m) - sign * s2.p[k].coeff(m));
      if (d > worst) worst = d;
    }
    const Real dh = abs(s1.h[k] - s2.h[k]);
    if (dh > worst) worst = dh;
  }
  return worst;
}

}  // namespace squareice::orthopoly
