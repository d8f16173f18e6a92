#include <random>

#include "doctest.h"
#include "equicap/errors.hpp"
#include "equicap/experiments.hpp"
#include "equicap/polycore.hpp"
#include "oracles.hpp"

using namespace equicap;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int deg, int c) {
  std::uniform_int_distribution<int> U(-c, c);
  std::vector<BigInt> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = U(rng);
  while (v.back() == 0) v.back() = U(rng);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_SUITE("polycore") {

TEST_CASE("resultant examples") {
  CHECK(resultant_dd({-1, 0, 1}, {0, 1}, 2) == -1);
  CHECK(resultant_dd({-1, 0, 1}, {0, 0, 1}, 2) == 1);
  CHECK(resultant_dd({-1, 1}, {-1, 0, 1}, 2) == 0);
  CHECK_THROWS_AS(resultant_dd({-1, 0, 0, 1}, {1, 1}, 2), MathDomainError);
  CHECK_THROWS_AS(resultant_dd(IntPoly{}, {1, 1}, 2), MathDomainError);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant({-1, 0, 1}) == 4);
  CHECK(discriminant({1, 2, 1}) == 0);
  CHECK(discriminant({-1, 1, 1}) == 5);
  CHECK_THROWS_AS(discriminant(IntPoly{}), MathDomainError);
}

TEST_CASE("discriminant matches b^2 - 4ac and the cubic formula") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> U(-20, 20);
  for (int t = 0; t < 200; ++t) {
    long long a = U(rng);
    if (a == 0) a = 1;
    const long long b = U(rng), c = U(rng), e = U(rng);
    CHECK(discriminant({c, b, a}) == BigInt(b * b - 4 * a * c));
    // a x^3 + b x^2 + c x + e
    const BigInt cubic = BigInt(b * b) * c * c - 4 * BigInt(a) * c * c * c - 4 * BigInt(b) * b * b * e -
                         27 * BigInt(a) * a * e * e + 18 * BigInt(a) * b * c * e;
    CHECK(discriminant({e, c, b, a}) == cubic);
  }
}

TEST_CASE("Sylvester and subresultant routes agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const IntPoly p = random_poly(rng, 1 + t % 7, 9), q = random_poly(rng, 1 + (t / 7) % 6, 9);
    CHECK(detail::resultant_sylvester(p, p.degree(), q, q.degree()) == detail::resultant_subresultant(p, q));
  }
}

TEST_CASE("resultant equals the product over roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> D(1, 6);
  for (int t = 0; t < 300; ++t) {
    const int d = D(rng);
    const IntPoly p = random_poly(rng, d, 9);
    const IntPoly q = random_poly(rng, std::uniform_int_distribution<int>(0, d)(rng), 9);
    const double exact = resultant_dd(p, q, d).convert_to<double>();
    const double prod = oracle::product_resultant(p, q, d);
    CAPTURE(p.str());
    CAPTURE(q.str());
    if (exact == 0)
      CHECK(std::abs(prod) < 1e-6 * std::pow(10.0, d));
    else
      CHECK(std::abs(prod / exact - 1) < 1e-6);
  }
}

TEST_CASE("bezout") {
  auto b = bezout(3, 5);
  CHECK(b.g == 1);
  CHECK(b.x == 2);
  CHECK(b.y == -1);
  b = bezout(0, -7);
  CHECK(b.g == 7);
  CHECK(b.x == 0);
  CHECK(b.y == -1);
  b = bezout(6, 4);
  CHECK(b.g == 2);
  CHECK(b.x == 1);
  CHECK(b.y == -1);
  CHECK_THROWS_AS(bezout(0, 0), MathDomainError);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> U(-1000000000LL, 1000000000LL);
  for (int t = 0; t < 10000; ++t) {
    const BigInt a1 = U(rng), a2 = U(rng);
    if (a1 == 0 && a2 == 0) continue;
    const auto r = bezout(a1, a2);
    REQUIRE(r.g > 0);
    REQUIRE(a1 * r.x + a2 * r.y == r.g);
    REQUIRE(a1 % r.g == 0);
    REQUIRE(a2 % r.g == 0);
  }
}

TEST_CASE("unimodular shift") {
  const IntMatrix2 phi = unimodular_shift(3, 5);
  CHECK(phi.m[0][0] == -5);
  CHECK(phi.m[0][1] == 3);
  CHECK(phi.m[1][0] == -2);
  CHECK(phi.m[1][1] == 1);
  auto v = phi.apply(-3, -5);
  CHECK(v[0] == 0);
  CHECK(v[1] == 1);
  v = unimodular_shift(0, -1).apply(0, 1);
  CHECK(v[0] == 0);
  CHECK(v[1] == 1);
  CHECK_THROWS_AS(unimodular_shift(2, 4), MathDomainError);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> U(-50, 50);
  for (int t = 0; t < 1000; ++t) {
    const BigInt a1 = U(rng), a2 = U(rng);
    if ((a1 == 0 && a2 == 0) || bezout(a1, a2).g != 1) continue;
    const IntMatrix2 m = unimodular_shift(a1, a2);
    CHECK(abs(m.det()) == 1);
    const auto w = m.apply(-a1, -a2);
    CHECK(w[0] == 0);
    CHECK(w[1] == 1);
  }
}

TEST_CASE("roots: small examples") {
  auto r = roots(ComplexPoly({-1, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(oracle::brute_matching(r, {1.0, -1.0}) < 1e-12);
  r = roots(ComplexPoly({-1, 0, 0, 1}));
  for (const cplx& z : r) {
    CHECK(std::abs(std::abs(z) - 1) < 1e-10);
    CHECK(std::abs(z * z * z - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(roots(ComplexPoly({1})), MathDomainError);
}

TEST_CASE("roots: Vieta and scaling invariance") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const IntPoly p = random_poly(rng, 2 + t % 10, 9);
    const auto r = roots(ComplexPoly::from(p));
    const auto c = oracle::to_cplx(p);
    const int d = p.degree();
    cplx sum = 0, prod = 1;
    for (const cplx& z : r) {
      sum += z;
      prod *= z;
    }
    const cplx vs = -c[d - 1] / c[d], vp = (d % 2 ? -1.0 : 1.0) * c[0] / c[d];
    CHECK(std::abs(sum - vs) <= 1e-8 * std::max(1.0, std::abs(vs)));
    CHECK(std::abs(prod - vp) <= 1e-8 * std::max(1.0, std::abs(vp)));

    std::vector<cplx> scaled = c;
    for (auto& x : scaled) x *= cplx(-3.5, 2.0);
    const auto r2 = roots(ComplexPoly(scaled));
    if (discriminant(p) != 0) CHECK(matched_max_distance(r, r2) < 1e-8);
  }
}

TEST_CASE("roots: expanded unit polynomial matches the fiber solver") {
  // (z^2 + z - 1)^5 - z^5
  const UnitSequenceSpec spec{make_map({-1, 1, 1}, 1), BaseKind::circle, 0, 5};
  const IntPoly p = unit_poly(spec);
  CHECK(p == IntPoly({-1, 1, 1}).pow(5) - IntPoly::monomial(1, 5));
  CHECK(matched_max_distance(roots(ComplexPoly::from(p)), structured_roots(spec)) < 1e-8);
}

TEST_CASE("multiprecision roots agree with double roots when well conditioned") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const IntPoly p = random_poly(rng, 3 + t % 8, 9);
    if (discriminant(p) == 0) continue;
    CHECK(matched_max_distance(roots(ComplexPoly::from(p)), roots_multiprecision(p)) < 1e-8);
  }
}

TEST_CASE("IntPoly text format and conditioning") {
  const IntPoly p = IntPoly::parse("  -1 0\t1 ");
  CHECK(p == IntPoly({-1, 0, 1}));
  CHECK(IntPoly::parse(p.str()) == p);
  CHECK_THROWS(IntPoly::parse("1 x 2"));
  BigInt huge = 1;
  huge <<= 2000;
  CHECK_THROWS_AS(ComplexPoly::from(IntPoly(std::vector<BigInt>{1, huge})), ConditioningError);
}

}  // TEST_SUITE
