#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "equicap/json_io.hpp"

using namespace equicap;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "equicap");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kGolden = R"({"numerator":[-1,1,1],"pole_order":1,"base":"circle"})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("robinson") {
  const Run r = run({"robinson", "--tau", "0.25"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["trace"].get<double>() - 1.898) < 1e-3);
  CHECK(std::abs(j["w"].get<double>() - 1.03499) < 5e-5);
  CHECK(std::abs(j["s1"].get<double>() - 0.2) < 1e-8);
  for (const char* k : {"tau", "a", "b", "s1", "s2", "capacity", "trace"}) CHECK(j.contains(k));
}

TEST_CASE("capacity") {
  const Run r = run({"capacity", "--set", R"({"type":"interval","a":0.1715728752538097,"b":5.82842712474619})"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(json::parse(r.out)["capacity"].get<double>() - 1) < 1e-10);
  const Run p = run({"capacity", "--set",
                     R"({"type":"preimage","numerator":[-1,1,1],"pole_order":1,"base":{"type":"circle","center":[0,0],"radius":1}})"});
  REQUIRE(p.code == 0);
  CHECK(std::abs(json::parse(p.out)["capacity"].get<double>() - 1) < 1e-8);
  const Run c = run({"capacity", "--set", R"({"type":"circle","center":[0,0],"radius":1})", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("set,capacity,", 0) == 0);
}

TEST_CASE("lemma-check summary") {
  const Run r = run({"lemma-check", "--trials", "200", "--max-degree", "5", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("200/200 identity pass, 200/200 inequality pass\n", 0) == 0);
  const Run j = run({"lemma-check", "--trials", "20", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["trials"] == 20);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"sample-measure", "--set",
                                      R"({"type":"preimage","numerator":[-1,1,1],"pole_order":1,"base":{"type":"interval","a":-2,"b":2}})",
                                      "--count", "20", "--seed", "4"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("re,im,weight\n", 0) == 0);
}

TEST_CASE("equidist and lift-check") {
  const Run r = run({"equidist", "--spec", kGolden, "--m", "10,20", "--samples", "500"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("m,degree,height_weighted,lift_height,ks_discrepancy,moment1_err,moment2_err\n", 0) == 0);

  const std::string path = "cli_test_spec.json";
  std::ofstream(path) << kGolden;
  const std::string outpath = "cli_test_out.json";
  const Run l = run({"lift-check", "--spec", path, "--m", "4,8", "--out", outpath});
  REQUIRE(l.code == 0);
  CHECK(l.out.empty());
  std::ifstream in(outpath);
  const json rows = json::parse(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1]["res_matches_closed_form"] == true);
  CHECK(rows[1]["pushforward_max_dist"].get<double>() < 1e-8);
  std::remove(path.c_str());
  std::remove(outpath.c_str());
}

TEST_CASE("hom-energy") {
  const Run r = run({"hom-energy", "--m", "8", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find(",inf\n") != std::string::npos);
  const Run z = run({"hom-energy", "--map", R"({"d":2,"h1":[-1,0,1],"h2":[0,1,0],"a1":0,"a2":-1})", "--format", "csv"});
  REQUIRE(z.code == 0);
  CHECK(z.out.rfind("re_z1,im_z1,re_z2,im_z2,weight\n", 0) == 0);
  CHECK(std::count(z.out.begin(), z.out.end(), '\n') == 5);
}

TEST_CASE("game, trace, height") {
  const Run g = run({"game", "--matrix", "1,0,0,-1"});
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["equalizing"].is_null());
  const Run t = run({"trace", "--tau", "0.25"});
  REQUIRE(t.code == 0);
  const json tj = json::parse(t.out);
  CHECK(std::abs(tj["trace"].get<double>() - tj["trace_quadrature"].get<double>()) < 1e-8);
  const Run h = run({"height", "--set", R"({"type":"circle","center":[0,0],"radius":1})", "--poly", "-1 0 0 1"});
  REQUIRE(h.code == 0);
  CHECK(std::abs(json::parse(h.out)["height"].get<double>()) < 1e-12);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"robinson", "--bogus"}).code == 1);
  CHECK(run({"capacity", "--set", "{not json"}).code == 1);
  CHECK(run({"capacity", "--set", "/nonexistent/file.json"}).code == 1);
  CHECK(run({"game", "--matrix", "1,2"}).code == 1);
  const Run d = run({"robinson", "--tau", "0"});
  CHECK(d.code == 2);
  CHECK_FALSE(d.err.empty());
  CHECK(run({"capacity", "--set", R"({"type":"interval","a":-1,"b":1})"}).code == 2);
  CHECK(run({"height", "--set", R"({"type":"circle","center":[0,0],"radius":1})", "--poly", "0 1"}).code == 2);
  CHECK(run({"robinson", "--help"}).code == 0);
}

}  // TEST_SUITE
