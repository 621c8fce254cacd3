#include "evcop/bounds.hpp"
#include "evcop/coefficients.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace evcop;
using Catch::Matchers::WithinAbs;

TEST_CASE("rho_bounds and tau_bounds: examples", "[bounds]")
{
  auto const rho0 = rho_bounds(0.0);
  CHECK(rho0.lo == 0.0);
  CHECK_THAT(rho0.hi, WithinAbs(0.0, 1e-15));
  auto const rho1 = rho_bounds(1.0);
  CHECK_THAT(rho1.lo, WithinAbs(1.0, 1e-15));
  CHECK_THAT(rho1.hi, WithinAbs(1.0, 1e-15));

  auto const half = rho_bounds(0.5);
  CHECK_THAT(half.lo, WithinAbs(3.0 / 7.0, 1e-15));
  CHECK_THAT(half.hi, WithinAbs(1.0 - 16.0 / 49.0, 1e-15));

  auto const tau = tau_bounds(0.5);
  CHECK_THAT(tau.lo, WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(tau.hi, WithinAbs(0.5, 1e-15));
  CHECK_THROWS_AS(rho_bounds(1.1), ParamOutOfRange);
  CHECK_THROWS_AS(tau_bounds(-0.1), ParamOutOfRange);
}

TEST_CASE("interval endpoints are attained by MO and Pareto", "[bounds][property]")
{
  for (int k = 1; k <= 9; ++k) {
    double const lambda = k / 10.0;
    auto const mo = coefficients_numeric(mo_dependence(lambda, lambda));
    auto const pareto = coefficients_numeric(pareto_dependence(lambda / 2.0, lambda / 2.0));
    CHECK_THAT(mo.rho, WithinAbs(rho_bounds(lambda).lo, 1e-8));
    CHECK_THAT(mo.tau, WithinAbs(tau_bounds(lambda).lo, 1e-8));
    CHECK_THAT(pareto.rho, WithinAbs(rho_bounds(lambda).hi, 1e-8));
    CHECK_THAT(pareto.tau, WithinAbs(tau_bounds(lambda).hi, 1e-8));
  }
}

TEST_CASE("pointwise envelopes: examples", "[bounds]")
{
  CHECK_THAT(pointwise_lower(0.5, 0.25, 0.25), WithinAbs(std::pow(0.25, 1.5), 1e-15));
  CHECK_THAT(pointwise_lower(0.0, 0.3, 0.6), WithinAbs(0.18, 1e-15));
  CHECK_THAT(pointwise_upper(0.25, 0.25, 0.3, 0.6), WithinAbs(std::min(0.3, std::pow(0.18, 0.75)), 1e-15));
  CHECK(pointwise_upper(0.5, 0.5, 0.3, 0.6) == 0.3);

  auto const check = check_envelope(copula_from_pickands(gumbel_dependence(2.0)), 200);
  CHECK(check.ok());
  CHECK(check.grid == 200);
  CHECK_THAT(check.lambda, WithinAbs(2.0 - std::sqrt(2.0), 1e-15));
  // MO(lambda, lambda) is the lower envelope itself
  auto const tight = check_envelope(copula_from_pickands(mo_dependence(0.4, 0.4)), 50);
  CHECK(tight.max_lower_violation <= 1e-15);
  CHECK(tight.ok());
}

TEST_CASE("classical_region and inequalities: examples", "[bounds]")
{
  auto const [lo0, hi0] = classical_region(0.0);
  CHECK(lo0 == -0.5);
  CHECK(hi0 == 0.5);
  auto const [lo1, hi1] = classical_region(1.0);
  CHECK(lo1 == 1.0);
  CHECK(hi1 == 1.0);
  auto const [lo, hi] = classical_region(0.5);
  CHECK(lo <= 0.5);
  CHECK(hi >= 0.5);
  CHECK_THROWS_AS(classical_region(1.5), ParamOutOfRange);

  // MO(lambda, lambda) makes the Trutschnig bound an equality
  auto const mo = mo_closed_form(0.6, 0.6);
  auto const report = ev_inequalities(mo.rho, mo.tau);
  CHECK_THAT(report.trutschnig, WithinAbs(0.0, 1e-15));
  CHECK(report.pass());
  CHECK_FALSE(ev_inequalities(0.1, 0.5).pass());
}

TEST_CASE("Blomqvist conversion round-trips", "[bounds][property]")
{
  for (int k = 0; k <= 100; ++k) {
    double const lambda = k / 100.0;
    CHECK_THAT(lambda_from_blomqvist(blomqvist_from_lambda(lambda)), WithinAbs(lambda, 1e-14));
  }
  CHECK_THROWS_AS(lambda_from_blomqvist(-0.5), ParamOutOfRange);
}

TEST_CASE("random_corpus is deterministic and valid", "[bounds][property]")
{
  auto const first = random_corpus(50, 7);
  auto const second = random_corpus(50, 7);
  REQUIRE(first.size() == 50);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].kind == second[i].kind);
    CHECK(first[i].A.describe() == second[i].A.describe());
    CHECK(first[i].A(0.37) == second[i].A(0.37));
    CHECK(validate(first[i].A).valid);
  }
  // item i does not depend on how many items were requested
  auto const longer = random_corpus(80, 7);
  CHECK(longer[42].A(0.61) == first[42].A(0.61));
  CHECK(first[0].kind == CorpusKind::PiecewiseLinear);
  CHECK(first[4].kind == CorpusKind::Mixture);
}

TEST_CASE("mix of piecewise-linear functions stays valid", "[bounds]")
{
  auto const mixed = mix(mo_dependence(0.8, 0.2), pareto_dependence(0.3, 0.3), 0.4);
  CHECK(validate(mixed).valid);
  CHECK_THAT(mixed(0.5),
    WithinAbs(0.4 * mo_dependence(0.8, 0.2)(0.5) + 0.6 * pareto_dependence(0.3, 0.3)(0.5), 1e-15));
  CHECK_THROWS_AS(mix(mo_dependence(0.5, 0.5), gumbel_dependence(2.0), 0.5), ParamOutOfRange);
  CHECK_THROWS_AS(mix(mo_dependence(0.5, 0.5), mo_dependence(0.1, 0.1), 1.5), ParamOutOfRange);
}

TEST_CASE("verify_corpus finds no failures", "[bounds][property]")
{
  auto const report = verify_corpus(random_corpus(100, 42), 60);
  CHECK(report.failures() == 0);
  for (auto const &item : report.items) {
    CHECK(item.rho_margin() >= -1e-7);
    CHECK(item.tau_margin() >= -1e-7);
  }
}
