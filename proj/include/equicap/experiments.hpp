#pragma once

// Unit-polynomial sequences on preimage sets r^{-1}(E) and the measurements
// run on them: zero measures, heights, discrepancy against the limit law.

#include <cstdint>
#include <string>
#include <vector>

#include "equicap/homspace.hpp"
#include "equicap/planar.hpp"

namespace equicap {

enum class BaseKind { circle, interval4 };

struct UnitSequenceSpec {
  MonicRationalMap map;
  BaseKind base = BaseKind::circle;
  long long center = 0;  // interval4: E = [c-2, c+2]; circle: E = unit circle
  int m = 1;
};

BaseSet base_set(const UnitSequenceSpec& spec);
RationalPreimage preimage_set(const UnitSequenceSpec& spec);

/// 2 T_m((x - c)/2) as a monic integer polynomial in x.
IntPoly monic_chebyshev(int m, long long c);

/// circle:    N^m - z^{jm}
/// interval4: z^{jm} q_m(r(z)) with q_m = monic_chebyshev(m, c)
IntPoly unit_poly(const UnitSequenceSpec& spec);

/// The m points of E that r maps the zeros of unit_poly onto.
std::vector<cplx> base_values(const UnitSequenceSpec& spec);

/// Zeros of unit_poly(spec) fiber by fiber (N(z) - w z^j = 0 per base value w).
std::vector<cplx> structured_roots(const UnitSequenceSpec& spec);

/// Uniform measure on the zeros of p = unit_poly(spec). Throws if zeros are
/// not simple; for m <= 8 also cross-checks against roots() of the expansion.
DiscreteMeasure1D zero_measure(const IntPoly& p, const UnitSequenceSpec& spec);

/// Largest |a_i - b_pi(i)| under the matching pi minimizing sum |a_i - b_pi(i)|
/// (Hungarian algorithm).
double matched_max_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Kolmogorov-Smirnov distance between r_* nu and the base equilibrium law.
double ks_pushforward(const DiscreteMeasure1D& nu, const UnitSequenceSpec& spec);

struct DiscrepancyReport {
  double ks;
  double moment1_err, moment2_err;  // |E_nu z^k - MC estimate|, k = 1, 2
  double sigma1, sigma2;            // standard errors of the MC estimates
};
DiscrepancyReport discrepancy(const DiscreteMeasure1D& nu, const UnitSequenceSpec& spec,
                              int samples = 10000, std::uint64_t seed = 12345);

struct PolydiskSequence {
  DiscreteMeasure2D generic;      // zeros of (z1^n - 1, z2^n - 1)
  DiscreteMeasure2D non_generic;  // zeros of (z1^n, z2^n - 1)
};
PolydiskSequence mu_sequence_polydisk(int n);

struct ReportRow {
  int m, degree;
  double height_weighted, lift_height, ks, moment1_err, moment2_err;
  double sigma1, sigma2;
};
struct ConvergenceReport {
  std::vector<ReportRow> rows;
  bool ks_decreasing;
  bool heights_small;  // all |h| < 1e-8
};
/// Uniform integer coefficients in [-c, c], degree d; constants in [-a, a]
/// (a = 0 gives the canonical constants (0, -1)). Redraws until Res != 0.
HomMap random_hommap(std::uint64_t seed, int d, int c, int a);

struct WedgeSuiteResult {
  int trials = 0;
  int identity_pass = 0, inequality_pass = 0;
  int redraws = 0;              // non-generic or Res = 0 draws that were replaced
  int branch_counts[3] = {0, 0, 0};  // canonical, unimodular, scaled
  double worst_identity = 0;    // max |lhs/rhs - 1|
  double worst_slack = 0;       // min log_lhs - log_bound
};
/// Wedge identity on canonical maps and the inequality on maps with random
/// constants; d uniform in [2, max_degree], coefficients in [-9, 9], constants
/// in [-5, 5]. Trial i uses its own generator, so the result does not depend
/// on thread count.
WedgeSuiteResult wedge_suite(int trials, int max_degree, std::uint64_t seed);

ConvergenceReport run_report(UnitSequenceSpec spec, const std::vector<int>& m_list, int samples = 10000,
                             std::uint64_t seed = 12345);
std::string report_csv(const ConvergenceReport& r);

}  // namespace equicap
