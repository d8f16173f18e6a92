#pragma once

// Homogeneous potential theory in C^2: maps F = (F1 + a1, F2 + a2) with
// F1, F2 homogeneous of degree d, their resultants and zeros, and the
// pairwise wedge energy of discrete measures.

#include <optional>
#include <variant>
#include <vector>

#include "equicap/c2.hpp"
#include "equicap/planar.hpp"
#include "equicap/polycore.hpp"

namespace equicap {

/// h1[i], h2[i] multiply z1^i z2^(d-i).
template <class T>
struct HomMapT {
  int d = 0;
  std::vector<T> h1, h2;
  T a1{}, a2{};
};
using HomMap = HomMapT<BigInt>;
using HomMapC = HomMapT<cplx>;

/// Checks d >= 2, d+1 coefficients per part, one part nonzero.
HomMap make_hommap(int d, std::vector<BigInt> h1, std::vector<BigInt> h2, BigInt a1, BigInt a2);
HomMapC to_complex(const HomMap& F);

C2 eval(const HomMap& F, const C2& z);
C2 eval(const HomMapC& F, const C2& z);
/// Backward-error scale sum |h_i| |z1|^i |z2|^(d-i) + |a|, taken as a max
/// over both components.
double eval_scale(const HomMap& F, const C2& z);

/// res_{d,d}(F1(x,1), F2(x,1)); 0 when a part vanishes identically.
BigInt res_hommap(const HomMap& F);
/// Same for complex coefficients (Sylvester determinant with partial pivoting).
cplx res_hommap(const HomMapC& F);

/// Phi o F; constants transform with the homogeneous parts.
HomMap compose(const IntMatrix2& phi, const HomMap& F);

/// Which reduction brought F into the shape (G1, G2 - 1).
enum class NormalBranch { canonical, unimodular, scaled };

struct NormalForm {
  HomMap G;         // a1 = 0, a2 = -1
  BigInt g;         // zeros of F are g^(1/d) times zeros of G
  IntMatrix2 phi;   // G = phi o (F with constants divided by g)
  NormalBranch branch;
};
NormalForm normal_form(const HomMap& F);

/// All d^2 zeros with multiplicity. Throws MathDomainError if Res(F) = 0 or
/// both constants vanish, ConvergenceError if a residual check fails.
std::vector<C2> zeros_hommap(const HomMap& F);
/// Canonical-shape F only (a1 = 0, a2 = -1), with the roots of F1(x,1)
/// supplied by the caller; the direction (1,0) is added as needed.
std::vector<C2> zeros_hommap(const HomMap& F, const std::vector<cplx>& roots_f1);

/// Greedy pick of up to `want` pairwise non-proportional zeros after sorting
/// by (norm, arg z1, arg z2). Empty optional when fewer than `want` exist.
std::optional<std::vector<C2>> select_generic(std::vector<C2> zeros, int want);

/// Discriminant of the binary form F1: disc(p) when deg p = d,
/// lead(p)^2 disc(p) when deg p = d-1 (one root at infinity), else 0.
BigInt binary_discriminant(const IntPoly& p, int d);

struct WedgeIdentityResult {
  double log_lhs;  // sum_{i != k} log|xi_i ^ xi_k|
  double log_rhs;  // ((2-2d)/d) log|Res| + log|Disc|
  double rel_diff; // |lhs/rhs - 1|
};
/// F must have a1 = 0, a2 = -1. Throws MathDomainError when no generic
/// selection exists.
WedgeIdentityResult wedge_identity_check(const HomMap& F);

struct WedgeBoundResult {
  bool holds;
  double log_lhs, log_bound;
  NormalBranch branch;
};
/// prod_{i != k}|xi_i ^ xi_k| >= |Res F|^((2-2d)/d) up to relative slack.
WedgeBoundResult wedge_bound_check(const HomMap& F, double slack = 1e-9);

struct DiscreteMeasure2D {
  std::vector<C2> points;
  std::vector<double> weights;
};
DiscreteMeasure2D uniform_measure(std::vector<C2> points);

/// sum_{i != k} w_i w_k (-log|x_i ^ x_k|) over the full measure; +inf if any
/// two atoms are proportional.
double discrete_hom_energy(const DiscreteMeasure2D& mu);
/// (1/d^2) sum_{i != k} -log|xi_i ^ xi_k| over d greedily selected
/// non-proportional atoms; +inf when fewer than d exist.
double representative_hom_energy(const DiscreteMeasure2D& mu, int d);

struct Polydisk {
  double r1 = 1, r2 = 1;
};
struct Ball {
  double r = 1;
};
/// I_h of the natural measure on the distinguished boundary / sphere, by
/// nested tanh-sinh quadrature.
double quad_hom_energy(const Polydisk& P);
double quad_hom_energy(const Ball& B);

struct RobinFunctionK {
  PlanarSet set;
  ProbVector2 s;
  double gamma;
};
/// Equalizing vector and value of Gamma(K); (j/n, (n-j)/n) and the common
/// payoff for preimage sets. Throws if no equalizing vector exists.
RobinFunctionK make_robin_function(const PlanarSet& K);
double robin_fK(const RobinFunctionK& rf, const C2& z);

double robin_polydisk(const Polydisk& P, const C2& z);
double robin_ball(const Ball& B, const C2& z);

using Sigma = std::variant<Polydisk, Ball, RobinFunctionK>;
double robin(const Sigma& S, const C2& z);

/// (z2^d p(z1/z2), z1^m z2^(d-m) - 1), d = deg p.
HomMap lift(const IntPoly& p, int m);

/// (1/d^2)(log|Res F| + sum over zeros of max(0, rho(xi))).
double hom_height(const HomMap& F, const Sigma& S);
double hom_height(const HomMap& F, const Sigma& S, const std::vector<C2>& zeros);

/// z -> z1/z2; atoms on z2 = 0 go to mass_at_infinity.
DiscreteMeasure1D pushforward_pi(const DiscreteMeasure2D& mu);

}  // namespace equicap
