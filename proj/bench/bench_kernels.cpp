// Serial reference vs OpenMP kernels. With one core the two should tie;
// the interesting numbers come from OMP_NUM_THREADS > 1.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "equicap/kernels.hpp"

namespace {

using namespace equicap;

std::vector<C2> random_points(int n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  std::vector<C2> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) p = {cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
  return pts;
}

void pair_energy(benchmark::State& st, bool parallel) {
  const int n = static_cast<int>(st.range(0));
  const auto pts = random_points(n);
  const std::vector<double> w(pts.size(), 1.0 / n);
  for (auto _ : st)
    benchmark::DoNotOptimize(parallel ? kernels::pair_energy_parallel(pts, w) : kernels::pair_energy_serial(pts, w));
  st.SetComplexityN(n);
}

void wedge_logsum(benchmark::State& st, bool parallel) {
  const auto pts = random_points(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(parallel ? kernels::wedge_logsum_parallel(pts) : kernels::wedge_logsum_serial(pts));
}

void fiber_roots(benchmark::State& st, bool parallel) {
  const int m = static_cast<int>(st.range(0));
  const IntPoly N{-1, 1, 1};  // z^2 + z - 1
  std::vector<cplx> vals;
  for (int k = 0; k < m; ++k) vals.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
  for (auto _ : st) {
    auto r = parallel ? kernels::fiber_roots_parallel(N, 1, vals) : kernels::fiber_roots_serial(N, 1, vals);
    benchmark::DoNotOptimize(r.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(pair_energy, serial, false)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(pair_energy, parallel, true)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(wedge_logsum, serial, false)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(wedge_logsum, parallel, true)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(fiber_roots, serial, false)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_CAPTURE(fiber_roots, parallel, true)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
