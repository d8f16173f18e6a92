// Acceptance run: one PASS/FAIL line per criterion with timing. Exit status
// is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "equicap/errors.hpp"
#include "equicap/experiments.hpp"
#include "equicap/homspace.hpp"
#include "equicap/json_io.hpp"
#include "equicap/robinson.hpp"
#include "oracles.hpp"

using namespace equicap;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome ac1() {
  std::string a0 = "equicap", a1 = "robinson", a2 = "--tau", a3 = "0.25";
  char* argv[] = {a0.data(), a1.data(), a2.data(), a3.data()};
  std::ostringstream out, err;
  if (run_cli(4, argv, out, err) != 0) return {false, "cli failed: " + err.str()};
  const json j = json::parse(out.str());
  const double w = j["w"], a = j["a"], b = j["b"], s1 = j["s1"], s2 = j["s2"], tr = j["trace"];
  const bool ok = std::abs(w - 1.03499) <= 5e-5 && std::abs(a - 0.08160) <= 1e-4 && std::abs(b - 4.36641) <= 1e-4 &&
                  std::abs(s1 - 0.2) <= 1e-8 && std::abs(s2 - 0.8) <= 1e-8 && std::abs(tr - 1.898) <= 1e-3;
  return {ok, fmt("w=%.6f a=%.6f b=%.6f s=(%.10f, %.10f) trace=%.6f", w, a, b, s1, s2, tr)};
}

Outcome ac2() {
  double worst = 0;
  for (double tau : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0})
    worst = std::max(worst, std::abs(cantor_capacity(solve_tau(tau).interval()) - 1));
  const double e = std::abs(cantor_capacity(make_interval(3 - 2 * std::sqrt(2.0), 3 + 2 * std::sqrt(2.0))) - 1);
  return {worst <= 1e-10 && e <= 1e-10, fmt("max |cap-1| over J_tau = %.2e, [3-2sqrt2, 3+2sqrt2]: %.2e", worst, e)};
}

Outcome ac3() {
  const auto s = wedge_suite(1000, 6, 20240601);
  return {s.identity_pass == 1000,
          fmt("%d/1000 pass, worst |lhs/rhs-1| = %.2e, %d non-generic draws replaced", s.identity_pass,
              s.worst_identity, s.redraws)};
}

Outcome ac4() {
  const auto s = wedge_suite(1000, 6, 20240602);
  const bool all_branches = s.branch_counts[0] > 0 && s.branch_counts[1] > 0 && s.branch_counts[2] > 0;
  return {s.inequality_pass == 1000 && all_branches && s.worst_slack >= std::log1p(-1e-9),
          fmt("%d/1000 pass, min log slack %.4f; branches canonical %d, unimodular %d, scaled %d",
              s.inequality_pass, s.worst_slack, s.branch_counts[0], s.branch_counts[1], s.branch_counts[2])};
}

Outcome ac5() {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> U(-6, 6), D(2, 6), C(-9, 9);
  int comp_ok = 0, lift_ok = 0;
  for (int t = 0; t < 500; ++t) {
    const HomMap F = random_hommap(rng(), D(rng), 9, 5);
    const IntMatrix2 phi{{{{U(rng), U(rng)}, {U(rng), U(rng)}}}};
    comp_ok += res_hommap(compose(phi, F)) == boost::multiprecision::pow(phi.det(), F.d) * res_hommap(F);
  }
  for (int t = 0; t < 500; ++t) {
    const int d = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = C(rng);
    while (c[0] == 0) c[0] = C(rng);
    while (c[d] == 0) c[d] = C(rng);
    const IntPoly p(std::move(c));
    const int m = std::uniform_int_distribution<int>(0, d)(rng);
    const BigInt closed = boost::multiprecision::pow(p.lead(), d - m) * boost::multiprecision::pow(p.constant_term(), m);
    lift_ok += abs(res_hommap(lift(p, m))) == abs(closed);
  }
  return {comp_ok == 500 && lift_ok == 500, fmt("composition %d/500 exact, lift closed form %d/500 exact", comp_ok, lift_ok)};
}

Outcome ac6() {
  double wp = 0, wb = 0;
  for (auto [r1, r2] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.5}, std::pair{3.0, 0.7}})
    wp = std::max(wp, std::abs(quad_hom_energy(Polydisk{r1, r2}) + std::log(r1 * r2)));
  for (double r : {0.5, 1.0, 2.0})
    wb = std::max(wb, std::abs(quad_hom_energy(Ball{r}) - (-2 * std::log(r) + 0.5)));
  return {wp <= 1e-4 && wb <= 1e-3, fmt("polydisk max err %.2e, ball max err %.2e", wp, wb)};
}

Outcome ac7() {
  bool ok = true;
  std::string detail;
  for (BaseKind b : {BaseKind::circle, BaseKind::interval4}) {
    const UnitSequenceSpec spec{make_map({-1, 1, 1}, 1), b, 0, 1};
    const auto rep = run_report(spec, {10, 20, 40, 80, 160});
    double hmax = 0, zmax = 0;
    for (const auto& r : rep.rows) {
      hmax = std::max(hmax, std::abs(r.height_weighted));
      zmax = std::max(zmax, r.moment1_err / r.sigma1);
    }
    const double d160 = rep.rows.back().ks;
    ok = ok && hmax < 1e-8 && rep.ks_decreasing && d160 < 0.02 && zmax < 3;
    detail += fmt("%s: max|h|=%.1e, KS decreasing=%s, D_160=%.5f, max moment1 err/sigma=%.2f; ",
                  b == BaseKind::circle ? "circle" : "interval", hmax, rep.ks_decreasing ? "yes" : "no", d160, zmax);
  }
  return {ok, detail};
}

Outcome ac8() {
  bool ok = true;
  std::string detail;
  const std::pair<int, double> cases[] = {{8, 0.3}, {16, 0.16}, {32, 0.09}};
  for (auto [n, bound] : cases) {
    const auto seq = mu_sequence_polydisk(n);
    const double e = representative_hom_energy(seq.generic, n);
    const double non = discrete_hom_energy(seq.non_generic);
    const bool pass = std::abs(e) < bound && std::isinf(non) && non > 0;
    ok = ok && pass;
    detail += fmt("n=%d |I|=%.5f (<%.2f %s) non-generic=%s; ", n, std::abs(e), bound, pass ? "ok" : "MISS",
                  std::isinf(non) ? "+inf" : "finite");
  }
  return {ok, detail};
}

Outcome ac9() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-5, 5);
  int ok = 0;
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const GameMatrix2 g{U(rng), U(rng), U(rng), U(rng)};
    const double v = game_value(g), o = oracle::zoom_grid_maxmin(g);
    worst = std::max(worst, std::abs(v - o));
    const auto os = oracle::zoom_grid_equalizer(g);
    const auto s = equalizing_vector(g);
    bool good = std::abs(v - o) <= 1e-6 && s.has_value() == os.has_value();
    if (s && os) {
      const auto [f1, f2] = payoffs(g, *s);
      good = good && std::abs(s->s1 - *os) <= 1e-6 && std::abs(f1 - f2) <= 1e-12 * (1 + std::abs(f1));
      // the equalizer attains the value when the row payoffs slope oppositely
      if ((g.g11 - g.g12) * (g.g21 - g.g22) <= 0) good = good && std::abs(f1 - v) <= 1e-12 * (1 + std::abs(v));
    }
    ok += good;
  }
  // degenerate cases
  const auto c1 = equalizing_vector({0, 0, 0, 0});
  const auto c2 = equalizing_vector({0, 0, 0, -2});
  const auto c3 = equalizing_vector({1, 0, 0, -1});
  const bool deg = c1 && c1->s1 == 0.5 && c2 && c2->s1 == 1.0 && !c3 && game_value({1, 0, 0, -1}) == 0.0;
  return {ok == 1000 && deg, fmt("%d/1000 match oracle (worst %.1e); degenerate cases %s", ok, worst, deg ? "ok" : "WRONG")};
}

Outcome ac10() {
  double worst_push = 0, worst_h = 0;
  int n = 0;
  for (BaseKind b : {BaseKind::circle, BaseKind::interval4}) {
    UnitSequenceSpec spec{make_map({-1, 1, 1}, 1), b, 0, 1};
    const RobinFunctionK rf = make_robin_function(preimage_set(spec));
    for (int m : {2, 5, 10, 20, 40}) {
      spec.m = m;
      const IntPoly p = unit_poly(spec);
      const int d = p.degree();
      const HomMap F = lift(p, spec.map.j() * m);
      const auto zs = zeros_hommap(F, structured_roots(spec));
      const auto push = pushforward_pi(uniform_measure(zs));
      std::vector<cplx> reps;
      for (std::size_t i = 0; i < push.points.size(); i += static_cast<std::size_t>(d)) reps.push_back(push.points[i]);
      worst_push = std::max(worst_push, matched_max_distance(reps, roots_multiprecision(p)));
      worst_h = std::max(worst_h, std::abs(hom_height(F, rf, zs)));
      ++n;
    }
  }
  return {worst_push <= 1e-8 && worst_h <= 1e-8,
          fmt("%d sequences, max matched distance %.2e, max |lift height| %.2e", n, worst_push, worst_h)};
}

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "Robinson interval and trace at tau = 1/4", 1, ac1},
      {2, "Cantor capacity one on the Robinson family", 1, ac2},
      {3, "wedge product identity on 1000 random maps", 60, ac3},
      {4, "wedge product inequality, all gcd branches", 60, ac4},
      {5, "resultant composition law and lift closed form", 30, ac5},
      {6, "homogeneous energies of polydisk and ball", 120, ac6},
      {7, "equidistribution of unit sequences", 120, ac7},
      {8, "genericity counterexample energies", 30, ac8},
      {9, "2x2 game value and equalizing vectors", 10, ac9},
      {10, "lift coherence for unit sequences", 60, ac10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && dt < c.budget_s;
    failed += !pass;
    std::printf("AC%-2d %s  %-48s %7.3fs (budget %gs)  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, dt, c.budget_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
