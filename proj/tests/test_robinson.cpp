#include <cmath>

#include "doctest.h"
#include "equicap/errors.hpp"
#include "equicap/robinson.hpp"
#include "oracles.hpp"

using namespace equicap;
using doctest::Approx;

TEST_SUITE("robinson") {

TEST_CASE("tau = 1/4") {
  const RobinsonInterval J = solve_tau(0.25);
  CHECK(std::abs(J.a - 0.08160) < 1e-4);
  CHECK(std::abs(J.b - 4.36641) < 1e-4);
  const auto [r1, r2] = J.residuals();
  CHECK(std::abs(r1) < 1e-10);
  CHECK(std::abs(r2) < 1e-10);
  CHECK(J.M == Approx(std::log((std::sqrt(J.b) + std::sqrt(J.a)) / (std::sqrt(J.b) - std::sqrt(J.a)))));
}

TEST_CASE("invariants across tau") {
  double pa = 0, pb = 0;
  for (double tau : {0.001, 0.01, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 50.0, 1000.0}) {
    const RobinsonInterval J = solve_tau(tau);
    CAPTURE(tau);
    CHECK(J.a > 0);
    CHECK(J.a < 0.25);
    CHECK(J.b > 4);
    CHECK(J.a > pa);
    CHECK(J.b > pb);
    pa = J.a;
    pb = J.b;
    const auto [r1, r2] = J.residuals();
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-10);
  }
  const RobinsonInterval J0 = solve_tau(1e-3);
  CHECK(J0.a < 1e-2);
  CHECK(std::abs(J0.b - 4) < 1e-2);
  CHECK_THROWS_AS(solve_tau(0.0), MathDomainError);
  CHECK_THROWS_AS(solve_tau(1e4), MathDomainError);
  CHECK_THROWS_AS(solve_tau(NAN), MathDomainError);
}

TEST_CASE("capacity one and the equalizing vector tau/(1+tau)") {
  for (double tau : {0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    const RobinsonInterval J = solve_tau(tau);
    CAPTURE(tau);
    CHECK(std::abs(cantor_capacity(J.interval()) - 1) < 1e-10);
    const auto s = equalizing_vector(gamma_matrix(J.interval()));
    REQUIRE(s);
    CHECK(std::abs(s->s1 - tau / (1 + tau)) < 1e-8);
  }
}

TEST_CASE("w^25 - w^9 - 1 endpoints") {
  const J14 e = j14_endpoints();
  CHECK(std::abs(e.w - 1.03499) < 5e-5);
  CHECK(std::abs(std::pow(e.w, 25) - std::pow(e.w, 9) - 1) < 1e-10);
  const RobinsonInterval J = solve_tau(0.25);
  CHECK(std::abs(e.a - J.a) < 1e-6);
  CHECK(std::abs(e.b - J.b) < 1e-6);
}

TEST_CASE("trace bound") {
  const RobinsonInterval J = solve_tau(0.25);
  const double t = sss_trace(J, {0.2, 0.8});
  CHECK(std::abs(t - 1.898) < 1e-3);
  CHECK(std::abs(t - sss_trace_quadrature(J, {0.2, 0.8})) < 1e-8);
  CHECK(sss_trace(J, {0, 1}) == Approx((J.a + J.b) / 2));
  CHECK(sss_trace(J, {1, 0}) == Approx(std::sqrt(J.a * J.b)));
  const double q0 = oracle::integrate_density(J.interval(), NuKind::zero, [](double x) { return x; });
  CHECK(std::abs(q0 - sss_trace(J, {1, 0})) < 1e-9);
}

}  // TEST_SUITE
