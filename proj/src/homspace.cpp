#include "equicap/homspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "equicap/errors.hpp"
#include "equicap/kernels.hpp"

namespace equicap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_zero(const std::vector<BigInt>& h) {
  return std::all_of(h.begin(), h.end(), [](const BigInt& c) { return c == 0; });
}

// sum_i h[i] z1^i z2^(d-i)
template <class T>
cplx eval_form(const std::vector<T>& h, cplx z1, cplx z2) {
  cplx acc = 0;
  const int d = static_cast<int>(h.size()) - 1;
  // Horner in z1 with z2 powers carried along: sum h_i z1^i z2^(d-i).
  cplx p2 = 1;
  for (int i = d; i >= 0; --i) {
    cplx c;
    if constexpr (std::is_same_v<T, BigInt>)
      c = cplx(to_double(h[i]), 0.0);
    else
      c = h[i];
    acc = acc * z1 + c * p2;
    p2 *= z2;
  }
  return acc;
}

double form_scale(const std::vector<BigInt>& h, double r1, double r2) {
  const int d = static_cast<int>(h.size()) - 1;
  double s = 0;
  for (int i = 0; i <= d; ++i) s += std::abs(to_double(h[i])) * std::pow(r1, i) * std::pow(r2, d - i);
  return s;
}

std::vector<cplx> to_cplx(const std::vector<BigInt>& h) {
  std::vector<cplx> out;
  for (const BigInt& c : h) out.emplace_back(to_double(c), 0.0);
  return out;
}

cplx sylvester_det(const std::vector<cplx>& p, const std::vector<cplx>& q, int d) {
  const int n = 2 * d;
  std::vector<std::vector<cplx>> s(n, std::vector<cplx>(n, 0.0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k <= d; ++k) {
      s[i][i + k] = p[d - k];
      s[d + i][i + k] = q[d - k];
    }
  cplx det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(s[r][c]) > std::abs(s[piv][c])) piv = r;
    if (s[piv][c] == cplx(0)) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < n; ++r) {
      const cplx f = s[r][c] / s[c][c];
      for (int k = c; k < n; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

double form_scale(const std::vector<cplx>& h, double r1, double r2) {
  double s = 0, p2 = 1;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    s = s * r1 + std::abs(*it) * p2;
    p2 *= r2;
  }
  return s;
}

// Zeros of (G1, G2 - 1) from the roots of G1(x,1).
std::vector<C2> canonical_zeros(const HomMap& G, const std::vector<cplx>& roots_f1, int deg_f1) {
  const int d = G.d;
  const std::vector<cplx> h2 = to_cplx(G.h2);
  std::vector<C2> dirs;
  for (const cplx& a : roots_f1) dirs.push_back({a, 1.0});
  for (int k = deg_f1; k < d; ++k) dirs.push_back({1.0, 0.0});
  std::vector<C2> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (const C2& v : dirs) {
    const cplx c = eval_form(h2, v.z1, v.z2);
    if (c == cplx(0)) throw MathDomainError("F1 and F2 share a zero direction (Res = 0)");
    const double mod = std::pow(std::abs(c), -1.0 / d);
    for (int t = 0; t < d; ++t) {
      const cplx lam = std::polar(mod, (-std::arg(c) + 2.0 * std::numbers::pi * t) / d);
      out.push_back({lam * v.z1, lam * v.z2});
    }
  }
  return out;
}

void check_residuals(const HomMap& F, const std::vector<C2>& zs) {
  const HomMapC Fc = to_complex(F);
  for (const C2& z : zs) {
    const C2 v = eval(Fc, z);
    const double r1 = std::abs(z.z1), r2 = std::abs(z.z2);
    const double scale = std::max(form_scale(Fc.h1, r1, r2) + std::abs(Fc.a1),
                                  form_scale(Fc.h2, r1, r2) + std::abs(Fc.a2));
    if (std::max(std::abs(v.z1), std::abs(v.z2)) > 1e-8 * scale)
      throw ConvergenceError("zero of F fails the residual check");
  }
}

}  // namespace

HomMap make_hommap(int d, std::vector<BigInt> h1, std::vector<BigInt> h2, BigInt a1, BigInt a2) {
  if (d < 2) throw MathDomainError("HomMap needs degree d >= 2");
  if (static_cast<int>(h1.size()) != d + 1 || static_cast<int>(h2.size()) != d + 1)
    throw MathDomainError("HomMap parts need d+1 coefficients each");
  if (all_zero(h1) && all_zero(h2)) throw MathDomainError("HomMap parts are both zero");
  return {d, std::move(h1), std::move(h2), std::move(a1), std::move(a2)};
}

HomMapC to_complex(const HomMap& F) {
  return {F.d, to_cplx(F.h1), to_cplx(F.h2), cplx(to_double(F.a1), 0.0), cplx(to_double(F.a2), 0.0)};
}

C2 eval(const HomMap& F, const C2& z) {
  return {eval_form(F.h1, z.z1, z.z2) + to_double(F.a1), eval_form(F.h2, z.z1, z.z2) + to_double(F.a2)};
}

C2 eval(const HomMapC& F, const C2& z) {
  return {eval_form(F.h1, z.z1, z.z2) + F.a1, eval_form(F.h2, z.z1, z.z2) + F.a2};
}

double eval_scale(const HomMap& F, const C2& z) {
  const double r1 = std::abs(z.z1), r2 = std::abs(z.z2);
  return std::max(form_scale(F.h1, r1, r2) + std::abs(to_double(F.a1)),
                  form_scale(F.h2, r1, r2) + std::abs(to_double(F.a2)));
}

BigInt res_hommap(const HomMap& F) {
  if (all_zero(F.h1) || all_zero(F.h2)) return 0;
  return resultant_dd(IntPoly(F.h1), IntPoly(F.h2), F.d);
}

cplx res_hommap(const HomMapC& F) {
  if (static_cast<int>(F.h1.size()) != F.d + 1 || static_cast<int>(F.h2.size()) != F.d + 1)
    throw MathDomainError("HomMap parts need d+1 coefficients each");
  return sylvester_det(F.h1, F.h2, F.d);
}

HomMap compose(const IntMatrix2& phi, const HomMap& F) {
  HomMap G{F.d, std::vector<BigInt>(F.d + 1), std::vector<BigInt>(F.d + 1), 0, 0};
  for (int i = 0; i <= F.d; ++i) {
    G.h1[i] = phi.m[0][0] * F.h1[i] + phi.m[0][1] * F.h2[i];
    G.h2[i] = phi.m[1][0] * F.h1[i] + phi.m[1][1] * F.h2[i];
  }
  const auto a = phi.apply(F.a1, F.a2);
  G.a1 = a[0];
  G.a2 = a[1];
  return G;
}

NormalForm normal_form(const HomMap& F) {
  if (F.a1 == 0 && F.a2 == 0) throw MathDomainError("both constants vanish; zero set is not finite");
  const BezoutResult b = bezout(F.a1, F.a2);
  HomMap Fp = F;
  Fp.a1 = F.a1 / b.g;
  Fp.a2 = F.a2 / b.g;
  NormalForm nf{Fp, b.g, IntMatrix2{{{{1, 0}, {0, 1}}}}, NormalBranch::canonical};
  if (!(Fp.a1 == 0 && Fp.a2 == -1)) {
    nf.phi = unimodular_shift(Fp.a1, Fp.a2);
    nf.G = compose(nf.phi, Fp);
    nf.branch = NormalBranch::unimodular;
  }
  if (b.g > 1) nf.branch = NormalBranch::scaled;
  return nf;
}

std::vector<C2> zeros_hommap(const HomMap& F) {
  if (res_hommap(F) == 0) throw MathDomainError("Res(F) = 0: zero set is not finite");
  const NormalForm nf = normal_form(F);
  const IntPoly q(nf.G.h1);
  const int k = q.degree();
  std::vector<cplx> rts;
  if (k >= 1) rts = roots(ComplexPoly::from(q));
  auto zs = canonical_zeros(nf.G, rts, k);
  if (nf.g > 1) {
    const double sc = std::exp(log_abs(nf.g) / F.d);
    for (C2& z : zs) {
      z.z1 *= sc;
      z.z2 *= sc;
    }
  }
  check_residuals(F, zs);
  return zs;
}

std::vector<C2> zeros_hommap(const HomMap& F, const std::vector<cplx>& roots_f1) {
  if (!(F.a1 == 0 && F.a2 == -1)) throw MathDomainError("supplied-roots zeros need a1 = 0, a2 = -1");
  const IntPoly q(F.h1);
  if (q.is_zero()) throw MathDomainError("Res(F) = 0: F1 vanishes");
  if (static_cast<int>(roots_f1.size()) != q.degree())
    throw MathDomainError("need deg F1(x,1) supplied roots");
  auto zs = canonical_zeros(F, roots_f1, q.degree());
  check_residuals(F, zs);
  return zs;
}

std::optional<std::vector<C2>> select_generic(std::vector<C2> zeros, int want) {
  std::sort(zeros.begin(), zeros.end(), [](const C2& x, const C2& y) {
    return std::make_tuple(norm(x), std::arg(x.z1), std::arg(x.z2)) <
           std::make_tuple(norm(y), std::arg(y.z1), std::arg(y.z2));
  });
  std::vector<C2> sel;
  for (const C2& z : zeros) {
    if (static_cast<int>(sel.size()) == want) break;
    if (norm(z) == 0.0) continue;
    const bool fresh = std::none_of(sel.begin(), sel.end(), [&](const C2& s) { return proportional(s, z); });
    if (fresh) sel.push_back(z);
  }
  if (static_cast<int>(sel.size()) < want) return std::nullopt;
  return sel;
}

BigInt binary_discriminant(const IntPoly& p, int d) {
  const int k = p.degree();
  if (k == d) return discriminant(p);
  if (k == d - 1 && k >= 1) return p.lead() * p.lead() * discriminant(p);
  return 0;
}

WedgeIdentityResult wedge_identity_check(const HomMap& F) {
  if (!(F.a1 == 0 && F.a2 == -1)) throw MathDomainError("wedge_identity_check needs a1 = 0, a2 = -1");
  const BigInt res = res_hommap(F);
  if (res == 0) throw MathDomainError("Res(F) = 0");
  const BigInt disc = binary_discriminant(IntPoly(F.h1), F.d);
  if (disc == 0) throw MathDomainError("F is not generic (binary discriminant 0)");
  const auto sel = select_generic(zeros_hommap(F), F.d);
  if (!sel) throw MathDomainError("F is not generic: fewer than d non-proportional zeros");
  const double d = F.d;
  WedgeIdentityResult r;
  r.log_lhs = 2.0 * kernels::wedge_logsum_serial(*sel);
  r.log_rhs = (2.0 - 2.0 * d) / d * log_abs(res) + log_abs(disc);
  r.rel_diff = std::abs(std::expm1(r.log_lhs - r.log_rhs));
  return r;
}

WedgeBoundResult wedge_bound_check(const HomMap& F, double slack) {
  const BigInt res = res_hommap(F);
  if (res == 0) throw MathDomainError("Res(F) = 0");
  const NormalForm nf = normal_form(F);
  // zero directions are the roots of the normalized first part; a repeated
  // one splits numerically and would slip past select_generic
  if (binary_discriminant(IntPoly(nf.G.h1), F.d) == 0)
    throw MathDomainError("F is not generic (binary discriminant 0)");
  const auto sel = select_generic(zeros_hommap(F), F.d);
  if (!sel) throw MathDomainError("F is not generic: fewer than d non-proportional zeros");
  const double d = F.d;
  WedgeBoundResult r;
  r.log_lhs = 2.0 * kernels::wedge_logsum_serial(*sel);
  r.log_bound = (2.0 - 2.0 * d) / d * log_abs(res);
  r.holds = r.log_lhs >= r.log_bound + std::log1p(-slack);
  r.branch = nf.branch;
  return r;
}

DiscreteMeasure2D uniform_measure(std::vector<C2> points) {
  const double w = 1.0 / static_cast<double>(points.size());
  std::vector<double> ws(points.size(), w);
  return {std::move(points), std::move(ws)};
}

double discrete_hom_energy(const DiscreteMeasure2D& mu) {
  if (mu.points.size() < 2) throw MathDomainError("discrete_hom_energy needs at least 2 atoms");
  if (mu.weights.size() != mu.points.size()) throw MathDomainError("weights and points differ in length");
  return kernels::pair_energy_parallel(mu.points, mu.weights);
}

double representative_hom_energy(const DiscreteMeasure2D& mu, int d) {
  if (d < 2) throw MathDomainError("representative_hom_energy needs d >= 2");
  const auto sel = select_generic(mu.points, d);
  if (!sel) return kInf;
  return -2.0 * kernels::wedge_logsum_parallel(*sel) / (static_cast<double>(d) * d);
}

RobinFunctionK make_robin_function(const PlanarSet& K) {
  if (const auto* P = std::get_if<RationalPreimage>(&K)) {
    const auto pp = preimage_payoffs(*P);
    if (std::abs(pp.payoff0 - pp.payoffinf) > 1e-8)
      throw MathDomainError("preimage payoffs are not equal");
    return {K, pp.s, 0.5 * (pp.payoff0 + pp.payoffinf)};
  }
  const GameMatrix2 g = gamma_matrix(K);
  const auto s = equalizing_vector(g);
  if (!s) throw MathDomainError("Gamma(K) has no equalizing vector");
  const double v = game_value(g);
  const auto [f1, f2] = payoffs(g, *s);
  if (std::abs(f1 - v) > 1e-8 || std::abs(f2 - v) > 1e-8)
    throw MathDomainError("equalizing payoffs differ from the value of Gamma(K)");
  return {K, *s, v};
}

double robin_fK(const RobinFunctionK& rf, const C2& z) {
  const bool z1zero = z.z1 == cplx(0), z2zero = z.z2 == cplx(0);
  if (z1zero && z2zero) return -kInf;
  if (z1zero) return rf.gamma + std::log(std::abs(z.z2));
  if (z2zero) return rf.gamma + std::log(std::abs(z.z1));
  const cplx x = z.z1 / z.z2;
  double g;
  if (const auto* P = std::get_if<RationalPreimage>(&rf.set))
    g = pullback_green(P->map, P->base, x) / P->map.n();
  else
    g = rf.s.s1 * green_zero(rf.set, x) + rf.s.s2 * green_inf(rf.set, x);
  return g + rf.s.s1 * std::log(std::abs(z.z1)) + rf.s.s2 * std::log(std::abs(z.z2));
}

double robin_polydisk(const Polydisk& P, const C2& z) {
  return std::max(std::log(std::abs(z.z1) / P.r1), std::log(std::abs(z.z2) / P.r2));
}

double robin_ball(const Ball& B, const C2& z) { return std::log(norm(z) / B.r) + 0.25; }

double robin(const Sigma& S, const C2& z) {
  if (const auto* P = std::get_if<Polydisk>(&S)) return robin_polydisk(*P, z);
  if (const auto* B = std::get_if<Ball>(&S)) return robin_ball(*B, z);
  return robin_fK(std::get<RobinFunctionK>(S), z);
}

HomMap lift(const IntPoly& p, int m) {
  const int d = p.degree();
  if (d < 2) throw MathDomainError("lift needs deg p >= 2");
  if (m < 0 || m > d) throw MathDomainError("lift needs 0 <= m <= deg p");
  if (p.constant_term() == 0) throw MathDomainError("lift needs p(0) != 0");
  std::vector<BigInt> h1(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> h2(static_cast<std::size_t>(d) + 1, 0);
  h2[m] = 1;
  return make_hommap(d, std::move(h1), std::move(h2), 0, -1);
}

double hom_height(const HomMap& F, const Sigma& S) { return hom_height(F, S, zeros_hommap(F)); }

double hom_height(const HomMap& F, const Sigma& S, const std::vector<C2>& zeros) {
  const BigInt res = res_hommap(F);
  if (res == 0) throw MathDomainError("hom_height: Res(F) = 0");
  const double d = F.d;
  if (zeros.size() != static_cast<std::size_t>(F.d) * F.d) throw MathDomainError("hom_height needs d^2 zeros");
  std::vector<double> terms;
  terms.reserve(zeros.size() + 1);
  terms.push_back(log_abs(res));
  for (const C2& z : zeros) terms.push_back(std::max(0.0, robin(S, z)));
  return kernels::compensated_sum(terms) / (d * d);
}

DiscreteMeasure1D pushforward_pi(const DiscreteMeasure2D& mu) {
  DiscreteMeasure1D out;
  for (std::size_t i = 0; i < mu.points.size(); ++i) {
    const C2& z = mu.points[i];
    if (z.z2 == cplx(0)) {
      out.mass_at_infinity += mu.weights[i];
    } else {
      out.points.push_back(z.z1 / z.z2);
      out.weights.push_back(mu.weights[i]);
    }
  }
  return out;
}

}  // namespace equicap
