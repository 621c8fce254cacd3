#pragma once

#include "evcop/copula.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evcop {

struct SampleBatch
{
  std::vector<double> u;
  std::vector<double> v;
  std::uint64_t seed = 0;
  std::string generator;

  std::size_t size() const { return u.size(); }
};

/// Exact common-shock sampler. With unit-rate common shock E12 and
/// individual shocks of rates (1-alpha)/alpha and (1-beta)/beta,
/// U = exp(-min(E1,E12)/alpha), V = exp(-min(E2,E12)/beta) has copula
/// min{u^(1-alpha) v, u v^(1-beta)}. alpha = 0 or beta = 0 gives independence.
SampleBatch sample_mo(double alpha, double beta, std::size_t n, std::uint64_t seed);

/// Conditional inversion: u uniform, v = inf{v : dC/du(u,v) >= p}, p uniform.
/// The jump-aware inverse reproduces singular mass along kink curves.
SampleBatch sample_generic(EvCopula const &C, std::size_t n, std::uint64_t seed);

SampleBatch sample_independent(std::size_t n, std::uint64_t seed);

struct TailEstimate
{
  double threshold;
  double lambda;
};

struct EmpiricalCoefficients
{
  double rho = 0.0;
  double tau = 0.0;
  double beta = 0.0;
  std::vector<TailEstimate> lambda_by_threshold;
  double lambda = 0.0;
};

inline std::vector<double> const kDefaultLambdaThresholds{0.90, 0.95, 0.99};

/// Rank-based estimates. lambda(t) = 2 - ln C_n(t,t) / ln t on the empirical
/// copula of the pseudo-observations; the summary is the estimate at the
/// largest threshold, clipped to [0,1]. Throws DegenerateSample for fewer
/// than 10 pairs or a constant coordinate.
EmpiricalCoefficients empirical_coefficients(
  SampleBatch const &batch, std::vector<double> const &lambda_thresholds = kDefaultLambdaThresholds);

/// Average ranks (1-based); ties share the mean of their positions.
std::vector<double> average_ranks(std::span<double const> x);

/// Pair counts behind Kendall's tau.
struct KendallCounts
{
  std::int64_t pairs = 0;
  std::int64_t tied_x = 0;
  std::int64_t tied_y = 0;
  std::int64_t tied_both = 0;
  /// concordant minus discordant pairs
  std::int64_t score = 0;

  /// tau-b; equals the plain concordance fraction when there are no ties.
  double tau() const;
};

/// O(n log n) merge-sort count (Knight's algorithm).
KendallCounts kendall_counts(std::span<double const> x, std::span<double const> y);

double spearman_rho(std::span<double const> x, std::span<double const> y);

/// sup |F_n(x) - x| against the uniform distribution on [0,1].
double ks_uniform_statistic(std::span<double const> x);

} // namespace evcop
