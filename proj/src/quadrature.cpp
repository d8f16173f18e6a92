#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "equicap/errors.hpp"
#include "equicap/homspace.hpp"

// I_h(mu) = int int -log|z ^ w| dmu(z) dmu(w) for the two model measures.
// Inner integrals are tanh-sinh with breaks on the singular set; for the ball
// the outer average over a few z doubles as a symmetry check.

namespace equicap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

using boost::math::quadrature::tanh_sinh;

// -(1/2pi) int_0^{2pi} log|A - B e^{i theta}| d theta, A, B >= 0. The
// integrand is singular only at theta = 0 when A = B; the two-argument form
// gives the distance to the nearer endpoint exactly.
double ring_potential(tanh_sinh<double>& ts, double A, double B) {
  auto f = [&](double t, double tc) {
    const double u = (t < kPi) ? (tc < 0 ? -tc : t) : (tc > 0 ? tc : 2.0 * kPi - t);
    // log((A-B)^2 + 4AB sin^2(u/2)) without underflow as u -> 0.
    const double l1 = 2.0 * std::log(std::abs(A - B));
    const double l2 = std::log(4.0 * A * B) + 2.0 * std::log(std::sin(0.5 * u));
    const double hi = std::max(l1, l2), lo = std::min(l1, l2);
    return -0.5 * (hi + std::log1p(std::exp(lo - hi)));
  };
  return ts.integrate(f, 0.0, 2.0 * kPi, kTol) / (2.0 * kPi);
}

}  // namespace

double quad_hom_energy(const Polydisk& P) {
  if (!(P.r1 > 0 && P.r2 > 0)) throw MathDomainError("polydisk radii must be positive");
  tanh_sinh<double> ts;
  // z = (r1 e^{ia}, r2 e^{ib}), w = (r1 e^{ic}, r2 e^{ie}):
  // |z ^ w| = r1 r2 |1 - e^{i theta}|, theta = b + c - a - e uniform for any
  // fixed z, so one ring integral is the whole inner potential.
  return ring_potential(ts, 1.0, 1.0) - std::log(P.r1 * P.r2);
}

double quad_hom_energy(const Ball& B) {
  if (!(B.r > 0)) throw MathDomainError("ball radius must be positive");
  tanh_sinh<double> ts_outer, ts_inner;
  // z = r(cos psi e^{ia}, sin psi e^{ib}), w = r(cos phi e^{ic}, sin phi e^{ie});
  // |z ^ w| = r^2 |cos psi sin phi - sin psi cos phi e^{i theta}| with theta
  // uniform. Normalized sphere measure: |w1|^2 = cos^2 phi is uniform, so phi
  // carries density sin 2 phi on [0, pi/2].
  const double psis[] = {0.3, 0.785398163397448, 1.2};
  double total = 0;
  for (double psi : psis) {
    auto inner = [&](double phi) {
      return std::sin(2.0 * phi) * ring_potential(ts_inner, std::cos(psi) * std::sin(phi),
                                                  std::sin(psi) * std::cos(phi));
    };
    const double u = ts_outer.integrate(inner, 0.0, psi, kTol) +
                     ts_outer.integrate(inner, psi, 0.5 * kPi, kTol);
    total += u;
  }
  return total / 3.0 - 2.0 * std::log(B.r);
}

}  // namespace equicap
