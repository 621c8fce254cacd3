#include "evcop/coefficients.hpp"
#include "evcop/montecarlo.hpp"
#include "evcop/random.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace evcop;
using Catch::Matchers::WithinAbs;

TEST_CASE("kendall_counts matches direct enumeration", "[montecarlo][oracle]")
{
  Rng rng(31);
  for (int round = 0; round < 20; ++round) {
    std::size_t const n = 2 + rng.next() % 2000;
    std::vector<double> x(n);
    std::vector<double> y(n);
    // few distinct values on half the rounds to exercise ties
    double const levels = round % 2 == 0 ? 7.0 : 1e9;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::floor(levels * rng.uniform());
      y[i] = std::floor(levels * rng.uniform()) + (round % 4 == 1 ? x[i] : 0.0);
    }
    auto const fast = kendall_counts(x, y);
    auto const slow = oracle::kendall_direct(x, y);
    CHECK(fast.pairs == static_cast<std::int64_t>(n * (n - 1) / 2));
    CHECK(fast.score == slow.concordant - slow.discordant);
    CHECK(fast.tied_x == slow.tied_x);
    CHECK(fast.tied_y == slow.tied_y);
    CHECK(fast.tied_both == slow.tied_both);
  }
}

TEST_CASE("rank statistics: examples", "[montecarlo]")
{
  std::vector<double> const x{3.0, 1.0, 2.0, 2.0};
  CHECK(average_ranks(x) == std::vector<double>{4.0, 1.0, 2.5, 2.5});

  std::vector<double> const a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> b(a.rbegin(), a.rend());
  CHECK_THAT(spearman_rho(a, a), WithinAbs(1.0, 1e-15));
  CHECK_THAT(spearman_rho(a, b), WithinAbs(-1.0, 1e-15));
  CHECK_THAT(kendall_counts(a, a).tau(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(kendall_counts(a, b).tau(), WithinAbs(-1.0, 1e-15));
}

TEST_CASE("empirical_coefficients: examples", "[montecarlo]")
{
  SampleBatch comonotone;
  for (int i = 1; i <= 100; ++i) {
    comonotone.u.push_back(i / 101.0);
    comonotone.v.push_back(i / 101.0);
  }
  auto const e = empirical_coefficients(comonotone);
  CHECK_THAT(e.rho, WithinAbs(1.0, 1e-15));
  CHECK_THAT(e.tau, WithinAbs(1.0, 1e-15));
  CHECK_THAT(e.beta, WithinAbs(1.0, 1e-15));
  CHECK(e.lambda_by_threshold.size() == 3);
  CHECK(e.lambda >= 0.0);
  CHECK(e.lambda <= 1.0);

  SampleBatch small;
  small.u = {0.1, 0.2, 0.3};
  small.v = {0.3, 0.1, 0.2};
  CHECK_THROWS_AS(empirical_coefficients(small), DegenerateSample);
  SampleBatch constant = comonotone;
  std::fill(constant.v.begin(), constant.v.end(), 0.5);
  CHECK_THROWS_AS(empirical_coefficients(constant), DegenerateSample);
  CHECK_THROWS_AS(empirical_coefficients(comonotone, {0.5, 1.0}), ParamOutOfRange);
}

TEST_CASE("samplers are deterministic per seed", "[montecarlo]")
{
  auto const C = copula_from_pickands(gumbel_dependence(2.0));
  auto const first = sample_generic(C, 500, 11);
  auto const second = sample_generic(C, 500, 11);
  CHECK(first.u == second.u);
  CHECK(first.v == second.v);
  CHECK(first.seed == 11);
  CHECK(sample_generic(C, 500, 12).u != first.u);
  CHECK(sample_mo(0.5, 0.5, 500, 3).v == sample_mo(0.5, 0.5, 500, 3).v);
  CHECK(sample_mo(0.5, 0.5, 0, 3).size() == 0);
  CHECK_THROWS_AS(sample_mo(1.5, 0.5, 10, 3), ParamOutOfRange);
}

TEST_CASE("sampled margins are uniform", "[montecarlo][property]")
{
  std::size_t const n = 20000;
  double const critical = 1.63 / std::sqrt(static_cast<double>(n));
  auto const mo = sample_mo(0.7, 0.3, n, 5);
  auto const generic = sample_generic(copula_from_pickands(pareto_dependence(0.2, 0.3)), n, 5);
  for (auto const *batch : {&mo, &generic}) {
    CHECK(ks_uniform_statistic(batch->u) < critical);
    CHECK(ks_uniform_statistic(batch->v) < critical);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(batch->u[i] > 0.0);
      REQUIRE(batch->u[i] < 1.0);
      REQUIRE(batch->v[i] >= 0.0);
      REQUIRE(batch->v[i] <= 1.0);
    }
  }
}

TEST_CASE("sample estimates approach the population values", "[montecarlo][property]")
{
  std::size_t const n = 40000;
  auto const exact = empirical_coefficients(sample_mo(0.5, 0.5, n, 1));
  CHECK_THAT(exact.tau, WithinAbs(1.0 / 3.0, 0.02));
  CHECK_THAT(exact.rho, WithinAbs(3.0 / 7.0, 0.02));
  CHECK_THAT(exact.beta, WithinAbs(std::sqrt(2.0) - 1.0, 0.03));

  auto const generic = empirical_coefficients(sample_generic(copula_from_pickands(gumbel_dependence(2.0)), n, 1));
  CHECK_THAT(generic.tau, WithinAbs(0.5, 0.02));
  CHECK_THAT(generic.rho, WithinAbs(rho_numeric(gumbel_dependence(2.0)), 0.02));

  auto const independent = empirical_coefficients(sample_independent(n, 1));
  CHECK_THAT(independent.tau, WithinAbs(0.0, 0.02));
}

TEST_CASE("ks_uniform_statistic: examples", "[montecarlo]")
{
  std::vector<double> const grid{0.125, 0.375, 0.625, 0.875};
  CHECK_THAT(ks_uniform_statistic(grid), WithinAbs(0.125, 1e-15));
  std::vector<double> const bunched{0.0, 0.0, 0.0, 0.0};
  CHECK_THAT(ks_uniform_statistic(bunched), WithinAbs(1.0, 1e-15));
}
