#pragma once

// One-variable potential theory relative to the two poles 0 and infinity.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "equicap/polycore.hpp"

namespace equicap {

struct Interval {
  double a, b;  // a < b, real segment [a, b]
};

struct Circle {
  cplx center;
  double radius;  // > 0
};

/// r(z) = N(z) / z^j with N monic, N(0) = +-1, 1 <= j < n = deg N.
struct MonicRationalMap {
  IntPoly numerator;
  int pole_order = 1;

  int n() const { return numerator.degree(); }
  int j() const { return pole_order; }
  cplx eval(cplx z) const;
};

using BaseSet = std::variant<Interval, Circle>;

/// K = r^{-1}(E) for a base E of logarithmic capacity 1.
struct RationalPreimage {
  MonicRationalMap map;
  BaseSet base;
};

using PlanarSet = std::variant<Interval, Circle, RationalPreimage>;

// Validating constructors; throw MathDomainError on broken invariants.
Interval make_interval(double a, double b);
Circle make_circle(cplx center, double radius);
MonicRationalMap make_map(IntPoly numerator, int pole_order);
RationalPreimage make_preimage(MonicRationalMap map, BaseSet base);

PlanarSet as_planar(const BaseSet& E);

/// Image of K under z -> 1/z. Requires 0 outside the interval / off the
/// circle; preimage sets are rejected.
PlanarSet invert(const PlanarSet& K);

// Preimage sets only carry the weighted combination (see pullback_green), so
// the separate Green and Robin functions throw MathDomainError for them.
double green_inf(const PlanarSet& K, cplx z);
double green_zero(const PlanarSet& K, cplx z);
double robin_inf(const PlanarSet& K);
double robin_zero(const PlanarSet& K);

struct GameMatrix2 {
  double g11, g12, g21, g22;
};

struct ProbVector2 {
  double s1, s2;
};

/// Row payoffs (g11 s1 + g12 s2, g21 s1 + g22 s2).
std::pair<double, double> payoffs(const GameMatrix2& g, const ProbVector2& s);

/// [[robin_zero, g(0, inf)], [g(inf, 0), robin_inf]].
// Preimage sets: MathDomainError, use preimage_payoffs.
GameMatrix2 gamma_matrix(const PlanarSet& K);

/// max over s of the smaller row payoff, in closed form.
double game_value(const GameMatrix2& g);
/// s with equal row payoffs when one exists in the simplex; (1/2, 1/2) if
/// every s works.
std::optional<ProbVector2> equalizing_vector(const GameMatrix2& g);

/// j g_K(z,0) + (n-j) g_K(z,inf) = g_E(r(z), inf).
double pullback_green(const MonicRationalMap& r, const BaseSet& base, cplx z);

struct PreimagePayoffs {
  ProbVector2 s;    // (j/n, (n-j)/n)
  double payoff0;   // lim_{z->0}   s1 g(z,0) + s2 g(z,inf) + s1 log|z|
  double payoffinf; // lim_{z->inf} s1 g(z,0) + s2 g(z,inf) - s2 log|z|
};
PreimagePayoffs preimage_payoffs(const RationalPreimage& K);

/// exp(-val Gamma(K)); for preimage sets exp(-common payoff).
double cantor_capacity(const PlanarSet& K);

struct HeightReport {
  double log_const_lead = 0;  // log|a0 ad|
  double green_sum = 0;
  double total = 0;
  bool weighted = false;
};

HeightReport height(const PlanarSet& K, const IntPoly& p);
/// Same with the zeros of p supplied by the caller.
HeightReport height(const PlanarSet& K, const IntPoly& p, const std::vector<cplx>& zeros);

enum class NuKind { zero, inf };
/// Densities of the harmonic measure from 0 / from infinity on [a, b].
double nu_density(const Interval& K, NuKind which, double t);
/// int f dnu by the substitution t = mid + half cos(theta), which removes the
/// endpoint singularities; trapezoid rule on the periodic integrand.
/// Node count doubles from 64 until two passes agree to 1e-15.
double nu_integrate(const Interval& K, NuKind which, const std::function<double(double)>& f);
/// int t^k dnu.
double nu_moment(const Interval& K, NuKind which, int k);

struct DiscreteMeasure1D {
  std::vector<cplx> points;
  std::vector<double> weights;
  double mass_at_infinity = 0;

  double total_mass() const;
};

/// Draws from the base equilibrium measure and pulls each draw back through r.
DiscreteMeasure1D sample_nu_K(const RationalPreimage& K, const ProbVector2& s, int count,
                              std::uint64_t seed);

/// Equilibrium CDF of a capacity-one base, as a function of the coordinate the
/// experiments compare on (angle in [0, 2 pi) on a circle, t on an interval).
double base_cdf(const BaseSet& base, double x);
/// Coordinate of w for base_cdf.
double base_coordinate(const BaseSet& base, cplx w);

}  // namespace equicap
