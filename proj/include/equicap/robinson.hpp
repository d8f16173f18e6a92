#pragma once

// Robinson's interval family J_tau = [a(tau), b(tau)] and the trace bound
// that comes with it.

#include "equicap/planar.hpp"

namespace equicap {

struct RobinsonInterval {
  double tau, a, b;
  double M;  // log((sqrt b + sqrt a) / (sqrt b - sqrt a)) = g(0, inf)

  Interval interval() const { return {a, b}; }
  // log((b-a)/4) - tau M and log((b-a)/(4ab)) - M/tau.
  std::pair<double, double> residuals() const;
};

/// Nested bisection: outer on M > 0, inner (a, b) in closed form from
/// b - a = 4 e^{tau M}, ab = e^{tau M - M/tau}. tau must lie in [1e-3, 1e3].
RobinsonInterval solve_tau(double tau);

struct J14 {
  double w, a, b;
};
/// w > 1 with w^25 - w^9 - 1 = 0; sqrt a = w^5 - w^-3, sqrt b = w^5 + w^-3.
J14 j14_endpoints();

/// s1 sqrt(ab) + s2 (a+b)/2, the mean of s1 nu^0 + s2 nu^inf.
double sss_trace(const RobinsonInterval& J, const ProbVector2& s);
/// The same mean by quadrature against the two densities.
double sss_trace_quadrature(const RobinsonInterval& J, const ProbVector2& s);

}  // namespace equicap
