#include "equicap/kernels.hpp"

#include <cmath>
#include <exception>
#include <limits>

namespace equicap::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neumaier {
  double s = 0, c = 0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Row i of the pair energy: sum over k != i; +inf on a proportional pair.
double energy_row(std::span<const C2> pts, std::span<const double> w, std::size_t i) {
  Neumaier acc;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k == i) continue;
    if (proportional(pts[i], pts[k])) return kInf;
    acc.add(-w[i] * w[k] * std::log(std::abs(wedge(pts[i], pts[k]))));
  }
  return acc.value();
}

double logsum_row(std::span<const C2> pts, std::size_t i) {
  Neumaier acc;
  for (std::size_t k = i + 1; k < pts.size(); ++k) acc.add(std::log(std::abs(wedge(pts[i], pts[k]))));
  return acc.value();
}

std::vector<cplx> to_complex(const IntPoly& N) {
  std::vector<cplx> c;
  for (const BigInt& a : N.coeffs()) c.emplace_back(to_double(a), 0.0);
  return c;
}

void solve_fiber(const std::vector<cplx>& base, int j, cplx v, cplx* out) {
  std::vector<cplx> c = base;
  c[static_cast<std::size_t>(j)] -= v;
  const auto r = roots(ComplexPoly(std::move(c)));
  std::copy(r.begin(), r.end(), out);
}

}  // namespace

double compensated_sum(std::span<const double> xs) {
  Neumaier acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

double pair_energy_serial(std::span<const C2> pts, std::span<const double> w) {
  Neumaier acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == i) continue;
      if (proportional(pts[i], pts[k])) return kInf;
      acc.add(-w[i] * w[k] * std::log(std::abs(wedge(pts[i], pts[k]))));
    }
  }
  return acc.value();
}

double pair_energy_parallel(std::span<const C2> pts, std::span<const double> w) {
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<double> rows(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = energy_row(pts, w, static_cast<std::size_t>(i));
  for (double r : rows)
    if (r == kInf) return kInf;
  return compensated_sum(rows);
}

double wedge_logsum_serial(std::span<const C2> pts) {
  Neumaier acc;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = i + 1; k < pts.size(); ++k) acc.add(std::log(std::abs(wedge(pts[i], pts[k]))));
  return acc.value();
}

double wedge_logsum_parallel(std::span<const C2> pts) {
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<double> rows(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = logsum_row(pts, static_cast<std::size_t>(i));
  return compensated_sum(rows);
}

std::vector<cplx> fiber_roots_serial(const IntPoly& N, int j, std::span<const cplx> values) {
  const auto base = to_complex(N);
  const std::size_t n = static_cast<std::size_t>(N.degree());
  std::vector<cplx> out(n * values.size());
  for (std::size_t k = 0; k < values.size(); ++k) solve_fiber(base, j, values[k], out.data() + k * n);
  return out;
}

std::vector<cplx> fiber_roots_parallel(const IntPoly& N, int j, std::span<const cplx> values) {
  const auto base = to_complex(N);
  const std::size_t n = static_cast<std::size_t>(N.degree());
  std::vector<cplx> out(n * values.size());
  std::vector<std::exception_ptr> errs(values.size());
  const auto m = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < m; ++k) {
    try {
      solve_fiber(base, j, values[k], out.data() + k * n);
    } catch (...) {
      errs[k] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace equicap::kernels
