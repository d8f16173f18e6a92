#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equicap/errors.hpp"
#include "equicap/experiments.hpp"
#include "equicap/homspace.hpp"
#include "equicap/json_io.hpp"
#include "equicap/planar.hpp"
#include "equicap/robinson.hpp"

namespace equicap {
namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON has no infinities; keep them readable instead of turning into null.
ojson num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::string csv_cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

// Flat object -> header + one row; array of flat objects -> header + rows.
std::string to_csv(const ojson& v) {
  const ojson rows = v.is_array() ? v : ojson::array({v});
  if (rows.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << '\n';
  for (const auto& r : rows) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it) {
      os << (first ? "" : ",") << csv_cell(*it);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

json parse_json_arg(const std::string& s, const char* what) {
  try {
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) return json::parse(s);
    std::ifstream in(s);
    if (!in) throw UsageError(std::string(what) + ": cannot open '" + s + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s, std::size_t want) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw UsageError("bad number list '" + s + "'");
    }
  }
  if (out.size() != want) throw UsageError("expected " + std::to_string(want) + " comma-separated numbers");
  return out;
}

IntPoly parse_poly(const std::string& s) {
  try {
    return IntPoly::parse(s);
  } catch (const MathDomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad polynomial: ") + e.what());
  }
}

ojson game_json(const GameMatrix2& g) {
  ojson o;
  o["gamma"] = {{num(g.g11), num(g.g12)}, {num(g.g21), num(g.g22)}};
  o["value"] = num(game_value(g));
  if (auto s = equalizing_vector(g))
    o["equalizing"] = {s->s1, s->s2};
  else
    o["equalizing"] = nullptr;
  return o;
}

struct Options {
  std::string set, spec, poly, map, matrix, polydisk, m = "", n_list;
  std::string format = "json", out;
  double tau = 0.25, s1 = -1, ball = 0;
  int trials = 1000, max_degree = 6, count = 1000, samples = 10000;
  std::uint64_t seed = 12345;
};

ojson cmd_capacity(const Options& o) {
  const PlanarSet K = planar_set_from_json(parse_json_arg(o.set, "--set"));
  ojson r;
  r["set"] = ojson::parse(to_json(K).dump());
  r["capacity"] = num(cantor_capacity(K));
  if (const auto* P = std::get_if<RationalPreimage>(&K)) {
    const auto pp = preimage_payoffs(*P);
    r["s1"] = pp.s.s1;
    r["s2"] = pp.s.s2;
    r["payoff0"] = num(pp.payoff0);
    r["payoffinf"] = num(pp.payoffinf);
  } else {
    const ojson g = game_json(gamma_matrix(K));
    for (auto it = g.begin(); it != g.end(); ++it) r[it.key()] = *it;
  }
  return r;
}

ojson cmd_game(const Options& o) {
  const auto v = parse_double_list(o.matrix, 4);
  return game_json({v[0], v[1], v[2], v[3]});
}

ProbVector2 robinson_s(const RobinsonInterval& J) {
  const auto s = equalizing_vector(gamma_matrix(J.interval()));
  if (!s) throw MathDomainError("Gamma(J_tau) has no equalizing vector");
  return *s;
}

ojson cmd_robinson(const Options& o) {
  const RobinsonInterval J = solve_tau(o.tau);
  const ProbVector2 s = robinson_s(J);
  ojson r;
  r["tau"] = J.tau;
  r["a"] = J.a;
  r["b"] = J.b;
  r["s1"] = s.s1;
  r["s2"] = s.s2;
  r["capacity"] = cantor_capacity(J.interval());
  r["trace"] = sss_trace(J, s);
  if (o.tau == 0.25) r["w"] = j14_endpoints().w;
  return r;
}

ojson cmd_trace(const Options& o) {
  const RobinsonInterval J = solve_tau(o.tau);
  ProbVector2 s = robinson_s(J);
  if (o.s1 >= 0) {
    if (o.s1 > 1) throw MathDomainError("s1 must lie in [0, 1]");
    s = {o.s1, 1.0 - o.s1};
  }
  ojson r;
  r["tau"] = J.tau;
  r["s1"] = s.s1;
  r["s2"] = s.s2;
  r["trace"] = sss_trace(J, s);
  r["trace_quadrature"] = sss_trace_quadrature(J, s);
  return r;
}

ojson cmd_height(const Options& o) {
  const PlanarSet K = planar_set_from_json(parse_json_arg(o.set, "--set"));
  const IntPoly p = parse_poly(o.poly);
  const HeightReport h = height(K, p);
  ojson r;
  r["degree"] = p.degree();
  r["log_const_lead"] = num(h.log_const_lead);
  r["green_sum"] = num(h.green_sum);
  r["height"] = num(h.total);
  r["weighted"] = h.weighted;
  return r;
}

ojson cmd_wedge_check(const Options& o) {
  const WedgeSuiteResult s = wedge_suite(o.trials, o.max_degree, o.seed);
  ojson r;
  r["trials"] = s.trials;
  r["identity_pass"] = s.identity_pass;
  r["inequality_pass"] = s.inequality_pass;
  r["canonical"] = s.branch_counts[0];
  r["unimodular"] = s.branch_counts[1];
  r["scaled"] = s.branch_counts[2];
  r["redraws"] = s.redraws;
  r["worst_identity_rel"] = s.worst_identity;
  r["min_log_slack"] = num(s.worst_slack);
  return r;
}

std::string wedge_text(const ojson& r) {
  std::ostringstream os;
  const int t = r["trials"];
  os << r["identity_pass"].get<int>() << '/' << t << " identity pass, " << r["inequality_pass"].get<int>() << '/'
     << t << " inequality pass\n"
     << "branches: canonical " << r["canonical"].get<int>() << ", unimodular " << r["unimodular"].get<int>()
     << ", scaled " << r["scaled"].get<int>() << '\n';
  return os.str();
}

ojson cmd_hom_energy(const Options& o) {
  if (!o.map.empty()) {
    const HomMap F = hommap_from_json(parse_json_arg(o.map, "--map"));
    const auto zs = zeros_hommap(F);
    const DiscreteMeasure2D mu = uniform_measure(zs);
    if (o.format == "csv") {
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < zs.size(); ++i)
        rows.push_back({{"re_z1", zs[i].z1.real()},
                        {"im_z1", zs[i].z1.imag()},
                        {"re_z2", zs[i].z2.real()},
                        {"im_z2", zs[i].z2.imag()},
                        {"weight", mu.weights[i]}});
      return rows;
    }
    ojson r;
    r["d"] = F.d;
    r["res"] = ojson::parse(to_json(res_hommap(F)).dump());
    r["zeros"] = zs.size();
    r["energy"] = num(discrete_hom_energy(mu));
    r["representative_energy"] = num(representative_hom_energy(mu, F.d));
    return r;
  }
  if (!o.polydisk.empty()) {
    const auto v = parse_double_list(o.polydisk, 2);
    ojson r;
    r["r1"] = v[0];
    r["r2"] = v[1];
    r["energy"] = quad_hom_energy(Polydisk{v[0], v[1]});
    r["expected"] = -std::log(v[0] * v[1]);
    return r;
  }
  if (o.ball > 0) {
    ojson r;
    r["r"] = o.ball;
    r["energy"] = quad_hom_energy(Ball{o.ball});
    r["expected"] = -2.0 * std::log(o.ball) + 0.5;
    return r;
  }
  if (o.ball < 0) throw MathDomainError("ball radius must be positive");
  ojson rows = ojson::array();
  for (int n : parse_int_list(o.n_list.empty() ? "8,16,32" : o.n_list)) {
    const PolydiskSequence seq = mu_sequence_polydisk(n);
    rows.push_back({{"n", n},
                    {"generic_energy", num(representative_hom_energy(seq.generic, n))},
                    {"generic_raw_energy", num(discrete_hom_energy(seq.generic))},
                    {"nongeneric_energy", num(representative_hom_energy(seq.non_generic, n))}});
  }
  return rows;
}

// Lift zeros come in blocks of d per direction; keep one of each.
std::vector<cplx> orbit_reps(const DiscreteMeasure1D& push, int d) {
  if (push.mass_at_infinity > 0) throw MathDomainError("lift has zeros on z2 = 0");
  std::vector<cplx> reps;
  for (std::size_t i = 0; i < push.points.size(); i += static_cast<std::size_t>(d)) reps.push_back(push.points[i]);
  return reps;
}

ojson cmd_lift(const Options& o) {
  ojson rows = ojson::array();
  if (!o.poly.empty()) {
    const IntPoly p = parse_poly(o.poly);
    const int d = p.degree();
    const std::vector<int> ms = o.m.empty() ? std::vector<int>{d / 2} : parse_int_list(o.m);
    const auto rts = roots(ComplexPoly::from(p));
    for (int m : ms) {
      const HomMap F = lift(p, m);
      const BigInt res = res_hommap(F);
      const BigInt closed = boost::multiprecision::pow(p.lead(), static_cast<unsigned>(d - m)) *
                            boost::multiprecision::pow(p.constant_term(), static_cast<unsigned>(m));
      const DiscreteMeasure1D push = pushforward_pi(uniform_measure(zeros_hommap(F)));
      rows.push_back({{"m", m},
                      {"degree", d},
                      {"res_matches_closed_form", abs(res) == abs(closed)},
                      {"pushforward_max_dist", matched_max_distance(orbit_reps(push, d), rts)}});
    }
    return rows;
  }
  if (o.spec.empty()) throw UsageError("lift-check needs --poly or --spec");
  UnitSequenceSpec spec = unit_spec_from_json(parse_json_arg(o.spec, "--spec"));
  const RobinFunctionK rf = make_robin_function(preimage_set(spec));
  for (int m : parse_int_list(o.m.empty() ? "10,20" : o.m)) {
    spec.m = m;
    const IntPoly p = unit_poly(spec);
    const int d = p.degree(), e = spec.map.j() * m;
    const HomMap F = lift(p, e);
    const BigInt closed = boost::multiprecision::pow(p.lead(), static_cast<unsigned>(d - e)) *
                          boost::multiprecision::pow(p.constant_term(), static_cast<unsigned>(e));
    const DiscreteMeasure1D nu = zero_measure(p, spec);
    const auto zs = zeros_hommap(F, nu.points);
    const DiscreteMeasure1D push = pushforward_pi(uniform_measure(zs));
    rows.push_back({{"m", m},
                    {"degree", d},
                    {"res_matches_closed_form", abs(res_hommap(F)) == abs(closed)},
                    {"pushforward_max_dist", matched_max_distance(orbit_reps(push, d), roots_multiprecision(p))},
                    {"lift_height", num(hom_height(F, rf, zs))}});
  }
  return rows;
}

std::string cmd_equidist(const Options& o) {
  if (o.spec.empty()) throw UsageError("equidist needs --spec");
  const UnitSequenceSpec spec = unit_spec_from_json(parse_json_arg(o.spec, "--spec"));
  const auto rep = run_report(spec, parse_int_list(o.m.empty() ? "10,20,40,80" : o.m), o.samples, o.seed);
  if (o.format == "csv") return report_csv(rep);
  ojson r;
  r["ks_decreasing"] = rep.ks_decreasing;
  r["heights_small"] = rep.heights_small;
  r["rows"] = ojson::array();
  for (const auto& row : rep.rows)
    r["rows"].push_back({{"m", row.m},
                         {"degree", row.degree},
                         {"height_weighted", row.height_weighted},
                         {"lift_height", row.lift_height},
                         {"ks_discrepancy", row.ks},
                         {"moment1_err", row.moment1_err},
                         {"moment2_err", row.moment2_err},
                         {"sigma1", row.sigma1},
                         {"sigma2", row.sigma2}});
  return r.dump(2) + "\n";
}

ojson cmd_sample(const Options& o) {
  const PlanarSet K = planar_set_from_json(parse_json_arg(o.set, "--set"));
  const auto* P = std::get_if<RationalPreimage>(&K);
  if (!P) throw MathDomainError("sample-measure needs a preimage set");
  const int n = P->map.n(), j = P->map.j();
  const auto S = sample_nu_K(*P, {static_cast<double>(j) / n, static_cast<double>(n - j) / n}, o.count, o.seed);
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < S.points.size(); ++i)
    rows.push_back({{"re", S.points[i].real()}, {"im", S.points[i].imag()}, {"weight", S.weights[i]}});
  if (o.format == "json") return ojson{{"count", o.count}, {"points", rows}};
  return rows;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"equicap: capacities, heights and zero distributions of integer polynomials and maps"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write to this path instead of stdout");
  };

  auto* cap = app.add_subcommand("capacity", "Cantor capacity cap_{0,inf} of a planar set");
  cap->add_option("--set", o.set, "JSON set descriptor or file")->required();
  add_common(cap);

  auto* game = app.add_subcommand("game", "value and equalizing vector of a 2x2 game");
  game->add_option("--matrix", o.matrix, "g11,g12,g21,g22")->required();
  add_common(game);

  auto* rob = app.add_subcommand("robinson", "Robinson interval J_tau and its trace bound");
  rob->add_option("--tau", o.tau, "tau in [1e-3, 1e3]");
  add_common(rob);

  auto* tr = app.add_subcommand("trace", "trace bound of J_tau, closed form and quadrature");
  tr->add_option("--tau", o.tau, "tau in [1e-3, 1e3]");
  tr->add_option("--s1", o.s1, "override s1 (default: equalizing)");
  add_common(tr);

  auto* ht = app.add_subcommand("height", "height of an integer polynomial relative to a set");
  ht->add_option("--set", o.set, "JSON set descriptor or file")->required();
  ht->add_option("--poly", o.poly, "coefficients c0 c1 ... cd")->required();
  add_common(ht);

  auto* lem = app.add_subcommand("lemma-check", "random-map check of the wedge identity and inequality");
  lem->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  lem->add_option("--max-degree", o.max_degree)->check(CLI::Range(2, 12));
  lem->add_option("--seed", o.seed);
  add_common(lem);
  lem->get_option("--format")->description("json or csv (default: text summary)");

  auto* he = app.add_subcommand("hom-energy", "homogeneous energies: polydisk sequence, quadrature, or one map");
  he->add_option("--m,--n", o.n_list, "comma list of n for the polydisk sequence");
  he->add_option("--polydisk", o.polydisk, "r1,r2: quadrature on the distinguished boundary");
  he->add_option("--ball", o.ball, "r: quadrature on the sphere");
  he->add_option("--map", o.map, "HomMap JSON or file; csv format lists its zeros");
  add_common(he);

  auto* lc = app.add_subcommand("lift-check", "resultant and pushforward checks for lifts");
  lc->add_option("--poly", o.poly, "p as c0 c1 ... cd; --m gives the lift exponent(s)");
  lc->add_option("--spec", o.spec, "unit-sequence JSON or file; --m gives sequence indices");
  lc->add_option("--m", o.m, "comma list");
  add_common(lc);

  auto* eq = app.add_subcommand("equidist", "convergence report for a unit-polynomial sequence");
  eq->add_option("--spec", o.spec, "unit-sequence JSON or file")->required();
  eq->add_option("--m", o.m, "comma list of sequence indices");
  eq->add_option("--samples", o.samples, "Monte-Carlo draws from nu_K")->check(CLI::Range(2, 100000000));
  eq->add_option("--seed", o.seed);
  add_common(eq);

  auto* sm = app.add_subcommand("sample-measure", "draws from nu_K on a preimage set");
  sm->add_option("--set", o.set, "JSON preimage descriptor or file")->required();
  sm->add_option("--count", o.count)->check(CLI::PositiveNumber);
  sm->add_option("--seed", o.seed);
  add_common(sm);

  bool format_given = false;
  try {
    app.parse(argc, argv);
    for (auto* c : app.get_subcommands()) format_given = c->get_option("--format")->count() > 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    std::string text;
    auto render = [&](const ojson& v) { return o.format == "csv" ? to_csv(v) : v.dump(2) + "\n"; };
    if (*cap) text = render(cmd_capacity(o));
    else if (*game) text = render(cmd_game(o));
    else if (*rob) text = render(cmd_robinson(o));
    else if (*tr) text = render(cmd_trace(o));
    else if (*ht) text = render(cmd_height(o));
    else if (*lem) {
      const ojson r = cmd_wedge_check(o);
      text = format_given ? render(r) : wedge_text(r);
    } else if (*he) text = render(cmd_hom_energy(o));
    else if (*lc) text = render(cmd_lift(o));
    else if (*eq) {
      if (!format_given) o.format = "csv";
      text = cmd_equidist(o);
    } else if (*sm) {
      if (!format_given) o.format = "csv";
      text = render(cmd_sample(o));
    }

    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw UsageError("cannot write '" + o.out + "'");
      f << text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const MathDomainError& e) {
    err << "math-domain error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return 3;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace equicap
