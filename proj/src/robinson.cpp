#include "equicap/robinson.hpp"

#include <cmath>

#include "equicap/errors.hpp"

namespace equicap {
namespace {

struct AB {
  double a, b;
};

AB endpoints_for(double tau, double M) {
  const double L = 4.0 * std::exp(tau * M);
  const double P = std::exp(tau * M - M / tau);
  const double r = L + std::sqrt(L * L + 4.0 * P);
  return {2.0 * P / r, 0.5 * r};
}

double mval(double a, double b) { return 2.0 * std::atanh(std::sqrt(a / b)); }

// Positive at M = 0+, tends to -M for large M.
double phi(double tau, double M) {
  const AB e = endpoints_for(tau, M);
  return mval(e.a, e.b) - M;
}

}  // namespace

std::pair<double, double> RobinsonInterval::residuals() const {
  return {std::log((b - a) / 4.0) - tau * M, std::log((b - a) / (4.0 * a * b)) - M / tau};
}

RobinsonInterval solve_tau(double tau) {
  if (!(tau >= 1e-3 && tau <= 1e3)) throw MathDomainError("solve_tau: tau must lie in [1e-3, 1e3]");
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (phi(tau, hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 60) throw ConvergenceError("solve_tau: no sign change found for M");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (phi(tau, mid) > 0.0 ? lo : hi) = mid;
  }
  const double M = 0.5 * (lo + hi);
  const AB e = endpoints_for(tau, M);
  RobinsonInterval J{tau, e.a, e.b, mval(e.a, e.b)};
  const auto [r1, r2] = J.residuals();
  if (std::abs(r1) > 1e-10 || std::abs(r2) > 1e-10)
    throw ConvergenceError("solve_tau: residuals above 1e-10");
  return J;
}

J14 j14_endpoints() {
  auto f = [](double w) { return std::pow(w, 25) - std::pow(w, 9) - 1.0; };
  double lo = 1.0, hi = 2.0;  // f(1) = -1, f(2) > 0
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double w = 0.5 * (lo + hi);
  const double sa = std::pow(w, 5) - std::pow(w, -3), sb = std::pow(w, 5) + std::pow(w, -3);
  return {w, sa * sa, sb * sb};
}

double sss_trace(const RobinsonInterval& J, const ProbVector2& s) {
  return s.s1 * std::sqrt(J.a * J.b) + s.s2 * 0.5 * (J.a + J.b);
}

double sss_trace_quadrature(const RobinsonInterval& J, const ProbVector2& s) {
  const Interval I = J.interval();
  return s.s1 * nu_moment(I, NuKind::zero, 1) + s.s2 * nu_moment(I, NuKind::inf, 1);
}

}  // namespace equicap
