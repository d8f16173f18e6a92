#include <cmath>
#include <numbers>

#include <boost/multiprecision/mpfr.hpp>

#include "equicap/errors.hpp"
#include "equicap/polycore.hpp"

namespace equicap {
namespace {

namespace mp = boost::multiprecision;
using real = mp::number<mp::mpfr_float_backend<100>, mp::et_off>;

struct MpC {
  real re, im;
};

MpC operator+(const MpC& a, const MpC& b) { return {a.re + b.re, a.im + b.im}; }
MpC operator-(const MpC& a, const MpC& b) { return {a.re - b.re, a.im - b.im}; }
MpC operator*(const MpC& a, const MpC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
MpC operator/(const MpC& a, const MpC& b) {
  const real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
real norm2(const MpC& a) { return a.re * a.re + a.im * a.im; }

}  // namespace

std::vector<cplx> roots_multiprecision(const IntPoly& p, int max_iterations) {
  const int n = p.degree();
  if (n < 1) throw MathDomainError("roots_multiprecision: degree must be at least 1");
  int zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  std::vector<cplx> out(static_cast<std::size_t>(zeros), cplx(0));
  const int m = n - zeros;
  if (m == 0) return out;

  std::vector<real> c(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) c[i] = real(p.coeff(i + zeros).str());

  // Seed radius from Fujiwara's bound, evaluated with log_abs so that huge
  // coefficients do not overflow.
  const double ln = log_abs(p.lead());
  double best = -1e300;
  for (int i = 1; i <= m; ++i) {
    const BigInt a = p.coeff(m - i + zeros);
    if (a == 0) continue;
    double v = (log_abs(a) - ln) / i;
    if (i == m) v -= std::log(2.0) / m;
    best = std::max(best, v);
  }
  const double radius = 2.0 * std::exp(best);

  std::vector<MpC> z(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double th = 2.0 * std::numbers::pi * k / m + 0.4;
    z[k] = {real(radius * std::cos(th)), real(radius * std::sin(th))};
  }

  const real tol = real("1e-80");
  std::vector<char> done(static_cast<std::size_t>(m), 0);
  bool converged = false;
  for (int it = 0; it < max_iterations && !converged; ++it) {
    converged = true;
    for (int i = 0; i < m; ++i) {
      if (done[i]) continue;
      MpC v{real(0), real(0)}, dv{real(0), real(0)};
      for (int k = m; k >= 0; --k) {
        dv = dv * z[i] + v;
        v = v * z[i] + MpC{c[k], real(0)};
      }
      if (v.re == 0 && v.im == 0) {
        done[i] = 1;
        continue;
      }
      converged = false;
      const MpC ratio = v / dv;
      MpC sum{real(0), real(0)};
      for (int j = 0; j < m; ++j)
        if (j != i) sum = sum + MpC{real(1), real(0)} / (z[i] - z[j]);
      const MpC w = ratio / (MpC{real(1), real(0)} - ratio * sum);
      z[i] = z[i] - w;
      if (norm2(w) <= tol * tol * norm2(z[i])) done[i] = 1;
    }
  }
  if (!converged) {
    for (char d : done)
      if (!d) throw ConvergenceError("multiprecision Aberth iteration did not converge");
  }
  for (const auto& r : z) out.emplace_back(r.re.convert_to<double>(), r.im.convert_to<double>());
  return out;
}

}  // namespace equicap
