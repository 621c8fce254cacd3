#pragma once

#include "evcop/coefficients.hpp"
#include "evcop/copula.hpp"
#include "evcop/pickands.hpp"
#include "evcop/random.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace evcop {

struct BoundsInterval
{
  double lo;
  double hi;
  std::string attained_lo;
  std::string attained_hi;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

/// Lower pointwise envelope min{u^(1-lambda) v, u v^(1-lambda)}: the MO copula with alpha = beta = lambda.
double pointwise_lower(double lambda, double u, double v);

/// Upper pointwise envelope min{u, v, u^(1-a) v^(1-b)} for a tangent with a+b = lambda.
double pointwise_upper(double a, double b, double u, double v);

struct EnvelopeCheck
{
  int grid = 0;
  double lambda = 0.0;
  double max_lower_violation = 0.0;
  double max_upper_violation = 0.0;
  Tangent tangent{0.0, 0.0};

  bool ok(double tol = 1e-9) const { return max_lower_violation <= tol && max_upper_violation <= tol; }
};

/// Sweep a grid x grid lattice on [0,1]^2 and record how far C leaves the
/// envelope [pointwise_lower(lambda), pointwise_upper(tangent at 1/2)].
EnvelopeCheck check_envelope(EvCopula const &C, int grid);

/// Range of Spearman's rho over EV copulas with upper tail coefficient lambda.
BoundsInterval rho_bounds(double lambda);
/// Range of Kendall's tau over EV copulas with upper tail coefficient lambda.
BoundsInterval tau_bounds(double lambda);

/// Attainable rho for a given tau over all copulas.
std::pair<double, double> classical_region(double tau);

/// Margins of the Hutchinson-Lai and Trutschnig inequalities; a negative
/// margin is a violation.
struct InequalityReport
{
  double hutchinson_lai_lower;
  double hutchinson_lai_upper;
  double trutschnig;

  double worst() const;
  bool pass(double tol = 1e-9) const { return worst() >= -tol; }
};

InequalityReport ev_inequalities(double rho, double tau);

double lambda_from_blomqvist(double beta);
double blomqvist_from_lambda(double lambda);

// Random dependence functions ------------------------------------------------

enum class CorpusKind { PiecewiseLinear, MarshallOlkin, Gumbel, Pareto, Mixture };

std::string to_string(CorpusKind kind);

/// Convex piecewise-linear A with the given number of interior breakpoints:
/// sorted slopes in [-1,1], recentred so A(1) = 1 and rescaled into [-1,1].
DependenceFunction random_piecewise_linear(Rng &rng, int breakpoints);

/// Pointwise convex combination w A1 + (1-w) A2 of two piecewise-linear functions.
DependenceFunction mix(DependenceFunction const &first, DependenceFunction const &second, double weight);

struct CorpusItem
{
  CorpusKind kind;
  DependenceFunction A;
};

/// `n` dependence functions cycling through the corpus kinds. Item i depends
/// only on (seed, i).
std::vector<CorpusItem> random_corpus(int n, std::uint64_t seed);

// Verification sweep ---------------------------------------------------------

struct VerificationItem
{
  CorpusKind kind;
  std::string description;
  double lambda;
  double rho;
  double tau;
  BoundsInterval rho_interval;
  BoundsInterval tau_interval;
  EnvelopeCheck envelope;
  InequalityReport inequalities;

  /// Signed distance of rho/tau inside their intervals (negative = outside).
  double rho_margin() const;
  double tau_margin() const;
  bool pass(double interval_slack = 1e-7, double envelope_tol = 1e-9, double inequality_tol = 1e-9) const;
};

VerificationItem verify_one(CorpusKind kind, DependenceFunction const &A, int grid);

struct VerificationReport
{
  std::vector<VerificationItem> items;

  std::size_t failures() const;
};

VerificationReport verify_corpus(std::vector<CorpusItem> const &corpus, int grid);

} // namespace evcop
