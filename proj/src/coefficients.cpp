#include "evcop/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evcop {

namespace {

QuadratureSpec with_kinks(DependenceFunction const &A, QuadratureSpec spec)
{
  spec.split_points = A.kink_locations();
  return spec;
}

} // namespace

std::string_view to_string(Method m) { return m == Method::ClosedForm ? "closed_form" : "quadrature"; }

double rho_numeric(DependenceFunction const &A, QuadratureSpec spec)
{
  double const integral = integrate(
    [&A](double t) {
      double const d = A(t) + 1.0;
      return 1.0 / (d * d);
    },
    with_kinks(A, std::move(spec)));
  return 12.0 * integral - 3.0;
}

double tau_numeric(DependenceFunction const &A, QuadratureSpec spec)
{
  double atoms = 0.0;
  for (Kink const &k : A.kinks()) {
    atoms += k.t * (1.0 - k.t) * k.jump() / A(k.t);
  }
  if (A.is_piecewise_linear()) {
    return atoms;
  }
  double const smooth = integrate(
    [&A](double t) { return t * (1.0 - t) * A.second_derivative(t).value_or(0.0) / A(t); },
    with_kinks(A, std::move(spec)));
  return atoms + smooth;
}

double lambda_from_A(DependenceFunction const &A) { return std::clamp(2.0 * (1.0 - A(0.5)), 0.0, 1.0); }

double blomqvist(EvCopula const &C) { return 4.0 * C(0.5, 0.5) - 1.0; }

CoefficientSet mo_closed_form(double alpha, double beta)
{
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw ParamOutOfRange("Marshall-Olkin parameters must lie in [0,1]");
  }
  CoefficientSet out;
  if (alpha + beta > 0.0) {
    double const ab = alpha * beta;
    out.rho = 3.0 * ab / (2.0 * alpha - ab + 2.0 * beta);
    out.tau = ab / (alpha - ab + beta);
  }
  out.lambda = std::min(alpha, beta);
  out.beta = std::exp2(out.lambda) - 1.0;
  return out;
}

GumbelCoefficients gumbel_closed_form(double theta)
{
  if (!(theta >= 1.0)) {
    throw ParamOutOfRange("Gumbel parameter must be >= 1");
  }
  if (std::isinf(theta)) {
    return {1.0, 1.0};
  }
  return {1.0 - 1.0 / theta, 2.0 - std::exp2(1.0 / theta)};
}

double gumbel_tau_from_lambda(double lambda)
{
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ParamOutOfRange("tail coefficient must lie in [0,1]");
  }
  return 1.0 - std::log2(2.0 - lambda);
}

double gumbel_theta_from_lambda(double lambda)
{
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ParamOutOfRange("tail coefficient must lie in [0,1]");
  }
  if (lambda == 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / std::log2(2.0 - lambda);
}

ParetoCoefficients pareto_closed_form(double a, double b)
{
  if (!(a >= 0.0 && b >= 0.0 && a + b <= 1.0 + 1e-12)) {
    throw ParamOutOfRange("Pareto family needs a,b >= 0 and a+b <= 1");
  }
  double const lambda = std::min(a + b, 1.0);
  double const nu = a - b;
  double const denominator = (4.0 - lambda) * (4.0 - lambda) - 9.0 * nu * nu;
  double const numerator = 16.0 * (1.0 - lambda) * (1.0 - lambda);
  // a+b = 1 with |a-b| = 1 is 0/0; the envelope is then max{t,1-t}.
  double const rho = numerator == 0.0 ? 1.0 : 1.0 - numerator / denominator;
  return {rho, lambda};
}

CoefficientSet coefficients_numeric(DependenceFunction const &A)
{
  CoefficientSet out;
  out.rho = rho_numeric(A);
  out.tau = tau_numeric(A);
  out.rho_method = Method::Quadrature;
  out.tau_method = Method::Quadrature;
  out.lambda = lambda_from_A(A);
  out.beta = blomqvist(EvCopula(A));
  return out;
}

CoefficientSet coefficients(DependenceFunction const &A)
{
  if (auto const *mo = std::get_if<MarshallOlkin>(&A.family())) {
    return mo_closed_form(mo->alpha, mo->beta);
  }
  CoefficientSet out = coefficients_numeric(A);
  if (auto const *g = std::get_if<Gumbel>(&A.family())) {
    auto const closed = gumbel_closed_form(g->theta);
    out.tau = closed.tau;
    out.lambda = closed.lambda;
    out.tau_method = Method::ClosedForm;
    out.beta = std::exp2(out.lambda) - 1.0;
  }
  else if (auto const *p = std::get_if<ParetoFamily>(&A.family())) {
    auto const closed = pareto_closed_form(p->a, p->b);
    out.rho = closed.rho;
    out.tau = closed.tau;
    out.rho_method = Method::ClosedForm;
    out.tau_method = Method::ClosedForm;
  }
  return out;
}

} // namespace evcop
