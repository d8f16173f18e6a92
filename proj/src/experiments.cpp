#include "equicap/experiments.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "equicap/errors.hpp"
#include "equicap/kernels.hpp"

namespace equicap {
namespace {

constexpr double kPi = std::numbers::pi;

void check_spec(const UnitSequenceSpec& spec) {
  if (spec.m < 1) throw MathDomainError("unit sequence index m must be positive");
  make_map(spec.map.numerator, spec.map.pole_order);
}

struct MomentStats {
  cplx mean;
  double se;  // standard error of the mean, sqrt((var re + var im) / N)
};

MomentStats stats(const std::vector<cplx>& xs) {
  const double N = static_cast<double>(xs.size());
  cplx mean = 0;
  for (const cplx& x : xs) mean += x;
  mean /= N;
  double var = 0;
  for (const cplx& x : xs) var += std::norm(x - mean);
  var /= (N - 1.0);
  return {mean, std::sqrt(var / N)};
}

}  // namespace

BaseSet base_set(const UnitSequenceSpec& spec) {
  if (spec.base == BaseKind::circle) return Circle{0.0, 1.0};
  const double c = static_cast<double>(spec.center);
  return Interval{c - 2.0, c + 2.0};
}

RationalPreimage preimage_set(const UnitSequenceSpec& spec) {
  check_spec(spec);
  return make_preimage(spec.map, base_set(spec));
}

IntPoly monic_chebyshev(int m, long long c) {
  if (m < 0) throw MathDomainError("monic_chebyshev: m must be >= 0");
  const IntPoly y{-c, 1};
  IntPoly prev{2}, cur = y;
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly unit_poly(const UnitSequenceSpec& spec) {
  check_spec(spec);
  const IntPoly& N = spec.map.numerator;
  const int j = spec.map.j(), m = spec.m;
  if (spec.base == BaseKind::circle) return N.pow(static_cast<unsigned>(m)) - IntPoly::monomial(1, j * m);
  // sum_k q_k N^k z^{j(m-k)}
  const IntPoly q = monic_chebyshev(m, spec.center);
  IntPoly acc, Nk{1};
  for (int k = 0; k <= m; ++k) {
    const BigInt qk = q.coeff(k);
    if (qk != 0) acc = acc + qk * (Nk * IntPoly::monomial(1, j * (m - k)));
    if (k < m) Nk = Nk * N;
  }
  return acc;
}

std::vector<cplx> base_values(const UnitSequenceSpec& spec) {
  std::vector<cplx> w;
  w.reserve(static_cast<std::size_t>(spec.m));
  const int m = spec.m;
  for (int k = 0; k < m; ++k) {
    if (spec.base == BaseKind::circle)
      w.push_back(std::polar(1.0, 2.0 * kPi * k / m));
    else
      w.emplace_back(static_cast<double>(spec.center) + 2.0 * std::cos((2.0 * k + 1.0) * kPi / (2.0 * m)), 0.0);
  }
  return w;
}

std::vector<cplx> structured_roots(const UnitSequenceSpec& spec) {
  check_spec(spec);
  const auto w = base_values(spec);
  return kernels::fiber_roots_parallel(spec.map.numerator, spec.map.j(), w);
}

double matched_max_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw MathDomainError("matched_max_distance: sizes differ");
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0;
  // Hungarian algorithm with potentials, 1-based.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = std::abs(a[i0 - 1] - b[j - 1]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double worst = 0;
  for (int j = 1; j <= n; ++j) worst = std::max(worst, std::abs(a[p[j] - 1] - b[j - 1]));
  return worst;
}

DiscreteMeasure1D zero_measure(const IntPoly& p, const UnitSequenceSpec& spec) {
  auto rts = structured_roots(spec);
  if (static_cast<int>(rts.size()) != p.degree())
    throw MathDomainError("zero_measure: structured root count differs from deg p");
  for (std::size_t i = 0; i < rts.size(); ++i)
    for (std::size_t k = i + 1; k < rts.size(); ++k)
      if (std::abs(rts[i] - rts[k]) <= 1e-9) throw MathDomainError("unit polynomial has a repeated zero");
  if (spec.m <= 8) {
    const auto direct = roots(ComplexPoly::from(p));
    if (matched_max_distance(rts, direct) > 1e-8)
      throw ConvergenceError("structured and direct roots disagree");
  }
  const double w = 1.0 / static_cast<double>(rts.size());
  DiscreteMeasure1D nu;
  nu.weights.assign(rts.size(), w);
  nu.points = std::move(rts);
  return nu;
}

double ks_pushforward(const DiscreteMeasure1D& nu, const UnitSequenceSpec& spec) {
  const BaseSet E = base_set(spec);
  std::vector<std::pair<double, double>> xs;
  xs.reserve(nu.points.size());
  for (std::size_t i = 0; i < nu.points.size(); ++i)
    xs.emplace_back(base_coordinate(E, spec.map.eval(nu.points[i])), nu.weights[i]);
  std::sort(xs.begin(), xs.end());
  double cum = 0, D = 0;
  for (const auto& [x, w] : xs) {
    const double F = base_cdf(E, x);
    D = std::max(D, std::abs(cum - F));
    cum += w;
    D = std::max(D, std::abs(cum - F));
  }
  return D;
}

DiscrepancyReport discrepancy(const DiscreteMeasure1D& nu, const UnitSequenceSpec& spec, int samples,
                              std::uint64_t seed) {
  DiscrepancyReport r{};
  r.ks = ks_pushforward(nu, spec);
  const RationalPreimage K = preimage_set(spec);
  const int n = K.map.n(), j = K.map.j();
  const auto S = sample_nu_K(K, {static_cast<double>(j) / n, static_cast<double>(n - j) / n}, samples, seed);
  // Draws are independent; the n preimages of one draw are not, so average
  // within a draw first.
  std::vector<cplx> d1(static_cast<std::size_t>(samples)), d2(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    cplx a = 0, b = 0;
    for (int k = 0; k < n; ++k) {
      const cplx x = S.points[static_cast<std::size_t>(i) * n + k];
      a += x;
      b += x * x;
    }
    d1[i] = a / static_cast<double>(n);
    d2[i] = b / static_cast<double>(n);
  }
  const MomentStats s1 = stats(d1), s2 = stats(d2);
  cplx m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < nu.points.size(); ++i) {
    m1 += nu.weights[i] * nu.points[i];
    m2 += nu.weights[i] * nu.points[i] * nu.points[i];
  }
  r.moment1_err = std::abs(m1 - s1.mean);
  r.moment2_err = std::abs(m2 - s2.mean);
  r.sigma1 = s1.se;
  r.sigma2 = s2.se;
  return r;
}

PolydiskSequence mu_sequence_polydisk(int n) {
  if (n < 2) throw MathDomainError("mu_sequence_polydisk needs n >= 2");
  std::vector<BigInt> zn(static_cast<std::size_t>(n) + 1, 0), wn(static_cast<std::size_t>(n) + 1, 0);
  zn[n] = 1;  // z1^n
  wn[0] = 1;  // z2^n
  const HomMap gen = make_hommap(n, zn, wn, -1, -1);
  const HomMap non = make_hommap(n, zn, wn, 0, -1);
  return {uniform_measure(zeros_hommap(gen)), uniform_measure(zeros_hommap(non))};
}

ConvergenceReport run_report(UnitSequenceSpec spec, const std::vector<int>& m_list, int samples,
                             std::uint64_t seed) {
  ConvergenceReport rep{{}, true, true};
  const RationalPreimage K = preimage_set(spec);
  const RobinFunctionK rf = make_robin_function(K);
  for (int m : m_list) {
    spec.m = m;
    const IntPoly p = unit_poly(spec);
    const DiscreteMeasure1D nu = zero_measure(p, spec);
    const HeightReport h = height(K, p, nu.points);
    const HomMap F = lift(p, spec.map.j() * m);
    const double lh = hom_height(F, rf, zeros_hommap(F, nu.points));
    const DiscrepancyReport d = discrepancy(nu, spec, samples, seed);
    rep.rows.push_back({m, p.degree(), h.total, lh, d.ks, d.moment1_err, d.moment2_err, d.sigma1, d.sigma2});
  }
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    if (std::abs(rep.rows[i].height_weighted) >= 1e-8) rep.heights_small = false;
    if (i > 0 && !(rep.rows[i].ks < rep.rows[i - 1].ks)) rep.ks_decreasing = false;
  }
  return rep;
}

HomMap random_hommap(std::uint64_t seed, int d, int c, int a) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-c, c), cst(-a, a);
  for (;;) {
    std::vector<BigInt> h1(static_cast<std::size_t>(d) + 1), h2(static_cast<std::size_t>(d) + 1);
    for (auto& x : h1) x = coef(rng);
    for (auto& x : h2) x = coef(rng);
    BigInt a1 = 0, a2 = -1;
    if (a > 0) {
      do {
        a1 = cst(rng);
        a2 = cst(rng);
      } while (a1 == 0 && a2 == 0);
    }
    if (std::all_of(h1.begin(), h1.end(), [](const BigInt& x) { return x == 0; }) ||
        std::all_of(h2.begin(), h2.end(), [](const BigInt& x) { return x == 0; }))
      continue;
    HomMap F = make_hommap(d, std::move(h1), std::move(h2), a1, a2);
    if (res_hommap(F) != 0) return F;
  }
}

WedgeSuiteResult wedge_suite(int trials, int max_degree, std::uint64_t seed) {
  if (trials < 1 || max_degree < 2) throw MathDomainError("wedge_suite needs trials >= 1 and max_degree >= 2");
  struct Trial {
    bool id_ok = false, ineq_ok = false;
    int redraws = 0, branch = 0;
    double id_err = 0, slack = 0;
  };
  std::vector<Trial> out(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> errs(out.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < trials; ++i) {
    try {
      std::seed_seq sq{seed, static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(sq);
      std::uniform_int_distribution<int> deg(2, max_degree);
      Trial& t = out[i];
      for (;;) {
        const HomMap F = random_hommap(rng(), deg(rng), 9, 0);
        try {
          const WedgeIdentityResult r = wedge_identity_check(F);
          t.id_err = r.rel_diff;
          t.id_ok = r.rel_diff < 1e-8;
          break;
        } catch (const MathDomainError&) {
          ++t.redraws;
        }
      }
      for (;;) {
        const HomMap F = random_hommap(rng(), deg(rng), 9, 5);
        try {
          const WedgeBoundResult r = wedge_bound_check(F);
          t.ineq_ok = r.holds;
          t.slack = r.log_lhs - r.log_bound;
          t.branch = static_cast<int>(r.branch);
          break;
        } catch (const MathDomainError&) {
          ++t.redraws;
        }
      }
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  WedgeSuiteResult res;
  res.trials = trials;
  res.worst_slack = std::numeric_limits<double>::infinity();
  for (const Trial& t : out) {
    res.identity_pass += t.id_ok;
    res.inequality_pass += t.ineq_ok;
    res.redraws += t.redraws;
    res.branch_counts[t.branch]++;
    res.worst_identity = std::max(res.worst_identity, t.id_err);
    res.worst_slack = std::min(res.worst_slack, t.slack);
  }
  return res;
}

std::string report_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "m,degree,height_weighted,lift_height,ks_discrepancy,moment1_err,moment2_err\n";
  for (const auto& row : r.rows)
    os << row.m << ',' << row.degree << ',' << row.height_weighted << ',' << row.lift_height << ',' << row.ks
       << ',' << row.moment1_err << ',' << row.moment2_err << '\n';
  return os.str();
}

}  // namespace equicap
