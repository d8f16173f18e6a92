#include <cmath>
#include <limits>
#include <numbers>

#include "equicap/errors.hpp"
#include "equicap/polycore.hpp"

namespace equicap {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Eval {
  cplx p, dp;
  double scale;
};

Eval eval_all(std::span<const cplx> c, cplx z) {
  cplx p = 0, dp = 0;
  double s = 0;
  const double r = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    s = s * r + std::abs(*it);
  }
  return {p, dp, s};
}

// Fujiwara's bound 2 max |a_{n-i}/a_n|^{1/i}; never larger than twice the
// Cauchy bound and much tighter when coefficients are unbalanced.
double root_radius(std::span<const cplx> c) {
  const int n = static_cast<int>(c.size()) - 1;
  const double ln = std::log(std::abs(c.back()));
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) {
    const double a = std::abs(c[n - i]);
    if (a == 0) continue;
    double v = (std::log(a) - ln) / i;
    if (i == n) v -= std::log(2.0) / n;  // the constant term enters halved
    best = std::max(best, v);
  }
  return 2.0 * std::exp(best);
}

bool aberth(std::span<const cplx> c, std::vector<cplx>& z, int max_iter) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval e = eval_all(c, z[i]);
      if (std::abs(e.p) <= 2.0 * n * kEps * e.scale) {
        done[i] = 1;
        continue;
      }
      all = false;
      const cplx ratio = e.p / e.dp;
      cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = 1;
    }
    if (all) return true;
  }
  for (char d : done)
    if (!d) return false;
  return true;
}

void seed_circle(std::vector<cplx>& z, double radius, double phase) {
  const int n = static_cast<int>(z.size());
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + phase);
}

void newton_polish(const ComplexPoly& p, cplx& z) {
  for (int k = 0; k < 3; ++k) {
    const auto [v, dv] = p.eval_with_derivative(z);
    if (v == cplx(0) || dv == cplx(0)) return;
    const cplx cand = z - v / dv;
    if (std::abs(p.eval(cand)) < std::abs(v))
      z = cand;
    else
      return;
  }
}

}  // namespace

std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opt) {
  const int n = p.degree();
  if (n < 1) throw MathDomainError("roots: degree must be at least 1");
  const auto c = p.coeffs();
  int zeros = 0;
  while (c[zeros] == cplx(0)) ++zeros;
  std::vector<cplx> out(static_cast<std::size_t>(zeros), cplx(0));
  const std::span<const cplx> rest = c.subspan(static_cast<std::size_t>(zeros));
  const int m = n - zeros;
  if (m == 0) return out;

  std::vector<cplx> z(static_cast<std::size_t>(m));
  if (m == 1) {
    z[0] = -rest[0] / rest[1];
  } else {
    const double rad = root_radius(rest);
    seed_circle(z, rad, 0.4);
    if (!aberth(rest, z, opt.max_iterations)) {
      seed_circle(z, 1.37 * rad, 1.1);
      if (!aberth(rest, z, opt.max_iterations))
        throw ConvergenceError("Aberth iteration did not converge for degree " + std::to_string(m));
    }
  }
  for (auto& r : z) newton_polish(p, r);
  for (const auto& r : z) {
    const double scale = p.eval_scale(r);
    if (std::abs(p.eval(r)) > opt.residual_tol * scale)
      throw ConvergenceError("root residual above tolerance");
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

}  // namespace equicap
