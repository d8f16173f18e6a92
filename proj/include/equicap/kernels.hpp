#pragma once

// Hot loops. Each has a serial reference and an OpenMP version; the parallel
// ones reduce per-row partial sums in fixed order, so the result does not
// depend on the thread count.

#include <span>
#include <vector>

#include "equicap/c2.hpp"
#include "equicap/polycore.hpp"

namespace equicap::kernels {

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> xs);

/// sum_{i != k} w_i w_k (-log|x_i ^ x_k|); +inf as soon as a pair is
/// proportional (see proportional()).
double pair_energy_serial(std::span<const C2> pts, std::span<const double> w);
double pair_energy_parallel(std::span<const C2> pts, std::span<const double> w);

/// sum_{i < k} log|x_i ^ x_k| (no weights); -inf on a zero wedge.
double wedge_logsum_serial(std::span<const C2> pts);
double wedge_logsum_parallel(std::span<const C2> pts);

/// Roots of N(z) - v z^j for every v; fiber k occupies [k n, (k+1) n).
std::vector<cplx> fiber_roots_serial(const IntPoly& N, int j, std::span<const cplx> values);
std::vector<cplx> fiber_roots_parallel(const IntPoly& N, int j, std::span<const cplx> values);

}  // namespace equicap::kernels
