#include "evcop/copula.hpp"
#include "evcop/random.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace evcop;
using Catch::Matchers::WithinAbs;

TEST_CASE("copula_from_pickands: examples", "[copula]")
{
  auto const independence = copula_from_pickands(mo_dependence(0.0, 0.0));
  CHECK_THAT(independence(0.3, 0.6), WithinAbs(0.18, 1e-15));

  auto const upper = copula_from_pickands(mo_dependence(1.0, 1.0));
  CHECK_THAT(upper(0.3, 0.6), WithinAbs(0.3, 1e-15));

  auto const C = copula_from_pickands(mo_dependence(0.5, 0.5));
  CHECK_THAT(C(0.5, 0.5), WithinAbs(std::pow(0.5, 1.5), 1e-15));

  for (double x : {0.0, 0.25, 0.8, 1.0}) {
    CHECK(C(x, 0.0) == 0.0);
    CHECK(C(0.0, x) == 0.0);
    CHECK_THAT(C(x, 1.0), WithinAbs(x, 1e-15));
    CHECK_THAT(C(1.0, x), WithinAbs(x, 1e-15));
  }
  CHECK_THAT(C(0.25, 0.49), WithinAbs(oracle::mo_copula(0.5, 0.5, 0.25, 0.49), 1e-15));
  CHECK_THAT(C(0.25, 0.49), WithinAbs(0.175, 1e-15));
  // arguments outside the square are clamped onto it
  CHECK(C(-0.1, 0.5) == 0.0);
  CHECK(C(0.5, 1.1) == 0.5);
}

TEST_CASE("MO copula matches the shock-model formula", "[copula][property]")
{
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    double const alpha = rng.uniform();
    double const beta = rng.uniform();
    auto const C = copula_from_pickands(mo_dependence(alpha, beta));
    for (int k = 0; k < 20; ++k) {
      double const u = rng.uniform_open();
      double const v = rng.uniform_open();
      CHECK_THAT(C(u, v), WithinAbs(oracle::mo_copula(alpha, beta, u, v), 1e-14));
    }
  }
}

TEST_CASE("partial_u matches a central difference off the kink curve", "[copula][property]")
{
  Rng rng(8);
  for (auto const &A : {gumbel_dependence(1.7), gumbel_dependence(4.0), mo_dependence(0.6, 0.3),
         pareto_dependence(0.2, 0.3)}) {
    auto const C = copula_from_pickands(A);
    for (int k = 0; k < 200; ++k) {
      double const u = 0.05 + 0.9 * rng.uniform();
      double const v = 0.05 + 0.9 * rng.uniform();
      double const t = std::log(v) / (std::log(u) + std::log(v));
      bool near_kink = false;
      for (double kink : A.kink_locations()) {
        near_kink = near_kink || std::abs(t - kink) < 1e-3;
      }
      if (near_kink) {
        continue;
      }
      double const expected = oracle::central_difference([&](double x) { return C(x, v); }, u);
      CHECK_THAT(C.partial_u(u, v), WithinAbs(expected, 1e-6));
    }
  }
}

TEST_CASE("partial_u: range and monotonicity in v", "[copula]")
{
  auto const C = copula_from_pickands(gumbel_dependence(2.0));
  double previous = 0.0;
  for (int k = 0; k <= 100; ++k) {
    double const h = C.partial_u(0.4, k / 100.0);
    CHECK(h >= 0.0);
    CHECK(h <= 1.0);
    CHECK(h >= previous - 1e-15);
    previous = h;
  }
  CHECK_THAT(C.partial_u(0.4, 1.0), WithinAbs(1.0, 1e-12));
  CHECK(C.partial_u(0.4, 0.0) == 0.0);
}

TEST_CASE("max-stability holds for every family", "[copula][property]")
{
  for (auto const &A : {mo_dependence(0.5, 0.5), mo_dependence(0.9, 0.1), gumbel_dependence(2.5),
         pareto_dependence(0.3, 0.1)}) {
    auto const C = copula_from_pickands(A);
    CHECK(check_max_stability(C, 2000, 1) <= 1e-12);
  }
  auto const C = copula_from_pickands(gumbel_dependence(3.0));
  CHECK(max_stability_error(C, 0.3, 0.7, 2.5) <= 1e-15);
}

TEST_CASE("diagonal: C(u,u) = u^(2-lambda)", "[copula][property]")
{
  Rng rng(12);
  for (auto const &A : {mo_dependence(0.3, 0.8), gumbel_dependence(1.4), pareto_dependence(0.4, 0.4)}) {
    auto const C = copula_from_pickands(A);
    CHECK_THAT(C.lambda(), WithinAbs(2.0 * (1.0 - A(0.5)), 1e-15));
    for (int k = 0; k < 100; ++k) {
      double const u = rng.uniform_open();
      CHECK_THAT(C(u, u), WithinAbs(std::pow(u, C.diagonal_exponent()), 1e-14));
    }
  }
}

TEST_CASE("copulas lie between the Frechet bounds and are 2-increasing", "[copula][property]")
{
  Rng rng(21);
  for (auto const &A : {mo_dependence(0.4, 0.9), gumbel_dependence(6.0), pareto_dependence(0.1, 0.5)}) {
    auto const C = copula_from_pickands(A);
    CHECK(check_two_increasing(C, 80) >= -1e-12);
    for (int k = 0; k < 200; ++k) {
      double const u = rng.uniform();
      double const v = rng.uniform();
      CHECK(C(u, v) >= u * v - 1e-15);
      CHECK(C(u, v) <= std::min(u, v) + 1e-15);
    }
  }
}

TEST_CASE("survival copula of the independence copula is itself", "[copula]")
{
  auto const C = copula_from_pickands(mo_dependence(0.0, 0.0));
  auto const S = survival_copula(C);
  CHECK_THAT(S(0.3, 0.6), WithinAbs(0.18, 1e-15));
  CHECK(check_two_increasing(S, 20) >= -1e-12);
  CHECK_THROWS_AS(check_two_increasing(C, 1), ParamOutOfRange);
}
