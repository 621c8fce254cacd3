#pragma once

#include "evcop/copula.hpp"
#include "evcop/numerics.hpp"
#include "evcop/pickands.hpp"

#include <string_view>

namespace evcop {

enum class Method { ClosedForm, Quadrature };

std::string_view to_string(Method m);

struct CoefficientSet
{
  double rho = 0.0;
  double tau = 0.0;
  double lambda = 0.0;
  double beta = 0.0;
  Method rho_method = Method::ClosedForm;
  Method tau_method = Method::ClosedForm;
  Method lambda_method = Method::ClosedForm;
  Method beta_method = Method::ClosedForm;
};

/// Spearman's rho = 12 * int_0^1 dt / (A(t)+1)^2 - 3, panels split at the kinks of A.
double rho_numeric(DependenceFunction const &A, QuadratureSpec spec = {});

/// Kendall's tau = int_0^1 t(1-t) dA'(t) / A(t), split into point masses at
/// the kinks plus the absolutely continuous part t(1-t) A''(t) / A(t).
double tau_numeric(DependenceFunction const &A, QuadratureSpec spec = {});

/// lambda = 2(1 - A(1/2)).
double lambda_from_A(DependenceFunction const &A);

/// beta = 4 C(1/2,1/2) - 1.
double blomqvist(EvCopula const &C);

CoefficientSet mo_closed_form(double alpha, double beta);

struct GumbelCoefficients
{
  double tau;
  double lambda;
};

GumbelCoefficients gumbel_closed_form(double theta);
/// tau = 1 - log2(2 - lambda) along the Gumbel family.
double gumbel_tau_from_lambda(double lambda);
/// theta = 1 / log2(2 - lambda); lambda = 1 gives +infinity.
double gumbel_theta_from_lambda(double lambda);

struct ParetoCoefficients
{
  double rho;
  double tau;
};

ParetoCoefficients pareto_closed_form(double a, double b);

/// Every coefficient by quadrature or direct evaluation of A.
CoefficientSet coefficients_numeric(DependenceFunction const &A);

/// Closed forms where the family has them, quadrature otherwise.
CoefficientSet coefficients(DependenceFunction const &A);

} // namespace evcop
