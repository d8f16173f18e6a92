#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "equicap/kernels.hpp"

using namespace equicap;

TEST_SUITE("kernels") {

TEST_CASE("compensated sum") {
  std::vector<double> xs{1e16, 1.0, -1e16, 1.0};
  CHECK(kernels::compensated_sum(xs) == 2.0);
}

TEST_CASE("serial and parallel agree") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> G;
  for (int n : {2, 17, 300}) {
    std::vector<C2> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) p = {cplx(G(rng), G(rng)), cplx(G(rng), G(rng))};
    const std::vector<double> w(pts.size(), 1.0 / n);
    CHECK(kernels::pair_energy_serial(pts, w) == kernels::pair_energy_parallel(pts, w));
    CHECK(kernels::wedge_logsum_serial(pts) == kernels::wedge_logsum_parallel(pts));
    pts.push_back(pts[0]);
    const std::vector<double> w2(pts.size(), 1.0 / (n + 1));
    CHECK(std::isinf(kernels::pair_energy_serial(pts, w2)));
    CHECK(std::isinf(kernels::pair_energy_parallel(pts, w2)));
  }
  const IntPoly N{-1, 1, 1};
  std::vector<cplx> vals;
  for (int k = 0; k < 50; ++k) vals.push_back(std::polar(1.0, 2 * std::numbers::pi * k / 50));
  CHECK(kernels::fiber_roots_serial(N, 1, vals) == kernels::fiber_roots_parallel(N, 1, vals));
}

}  // TEST_SUITE
