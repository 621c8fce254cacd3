#include "evcop/montecarlo.hpp"

#include "evcop/numerics.hpp"
#include "evcop/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace evcop {

namespace {

std::string describe(char const *name, std::string const &detail)
{
  std::ostringstream out;
  out << name << "(" << detail << ")";
  return out.str();
}

std::int64_t tied_pairs(std::span<double const> sorted)
{
  std::int64_t total = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) {
      ++j;
    }
    auto const g = static_cast<std::int64_t>(j - i);
    total += g * (g - 1) / 2;
    i = j;
  }
  return total;
}

// Stable merge sort of `y` that returns the number of strict inversions.
std::int64_t sort_counting_inversions(std::vector<double> &y)
{
  std::vector<double> buffer(y.size());
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < y.size(); width *= 2) {
    for (std::size_t lo = 0; lo < y.size(); lo += 2 * width) {
      std::size_t const mid = std::min(lo + width, y.size());
      std::size_t const hi = std::min(lo + 2 * width, y.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (y[j] < y[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buffer[k++] = y[j++];
        }
        else {
          buffer[k++] = y[i++];
        }
      }
      while (i < mid) {
        buffer[k++] = y[i++];
      }
      while (j < hi) {
        buffer[k++] = y[j++];
      }
    }
    std::swap(y, buffer);
  }
  return swaps;
}

double median(std::vector<double> x)
{
  std::sort(x.begin(), x.end());
  std::size_t const n = x.size();
  return n % 2 == 1 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

SampleBatch sample_independent(std::size_t n, std::uint64_t seed)
{
  Rng rng(seed);
  SampleBatch batch{{}, {}, seed, "independence()"};
  batch.u.resize(n);
  batch.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch.u[i] = rng.uniform_open();
    batch.v[i] = rng.uniform_open();
  }
  return batch;
}

SampleBatch sample_mo(double alpha, double beta, std::size_t n, std::uint64_t seed)
{
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw ParamOutOfRange("Marshall-Olkin parameters must lie in [0,1]");
  }
  if (alpha == 0.0 || beta == 0.0) {
    SampleBatch batch = sample_independent(n, seed);
    batch.generator = "mo-shock(independence)";
    return batch;
  }
  std::ostringstream params;
  params.precision(17);
  params << "alpha=" << alpha << ",beta=" << beta;
  SampleBatch batch{{}, {}, seed, describe("mo-shock", params.str())};
  batch.u.resize(n);
  batch.v.resize(n);

  double const rate_x = (1.0 - alpha) / alpha;
  double const rate_y = (1.0 - beta) / beta;
  double constexpr inf = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double const w_x = rng.uniform_open();
    double const w_y = rng.uniform_open();
    double const w_common = rng.uniform_open();
    double const common = -std::log(w_common);
    double const x = std::min(rate_x > 0.0 ? -std::log(w_x) / rate_x : inf, common);
    double const y = std::min(rate_y > 0.0 ? -std::log(w_y) / rate_y : inf, common);
    batch.u[i] = std::exp(-x / alpha);
    batch.v[i] = std::exp(-y / beta);
  }
  return batch;
}

SampleBatch sample_generic(EvCopula const &C, std::size_t n, std::uint64_t seed)
{
  DependenceFunction const &A = C.dependence();
  SampleBatch batch{{}, {}, seed, describe("conditional-inversion", A.describe())};
  batch.u.resize(n);
  batch.v.resize(n);
  bool const independent = A.kinks().empty() && A(0.5) == 1.0;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double const u = rng.uniform_open();
    double const p = rng.uniform_open();
    batch.u[i] = u;
    batch.v[i] = independent ? p : invert_monotone_cdf([&C, u](double v) { return C.partial_u(u, v); }, p, 0.0, 1.0);
  }
  return batch;
}

std::vector<double> average_ranks(std::span<double const> x)
{
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&x](std::size_t l, std::size_t r) { return x[l] < x[r]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) {
      ++j;
    }
    double const rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      ranks[order[k]] = rank;
    }
    i = j;
  }
  return ranks;
}

double KendallCounts::tau() const
{
  double const nx = static_cast<double>(pairs - tied_x);
  double const ny = static_cast<double>(pairs - tied_y);
  if (nx <= 0.0 || ny <= 0.0) {
    return 0.0;
  }
  return static_cast<double>(score) / std::sqrt(nx * ny);
}

KendallCounts kendall_counts(std::span<double const> x, std::span<double const> y)
{
  if (x.size() != y.size()) {
    throw ParamOutOfRange("Kendall's tau needs equally long samples");
  }
  std::size_t const n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return x[l] < x[r] || (x[l] == x[r] && y[l] < y[r]);
  });

  KendallCounts counts;
  counts.pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n > 0 ? n - 1 : 0) / 2;

  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[order[i]];
    ys[i] = y[order[i]];
  }
  counts.tied_x = tied_pairs(xs);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && xs[j] == xs[i] && ys[j] == ys[i]) {
      ++j;
    }
    auto const g = static_cast<std::int64_t>(j - i);
    counts.tied_both += g * (g - 1) / 2;
    i = j;
  }
  std::int64_t const swaps = sort_counting_inversions(ys);
  counts.tied_y = tied_pairs(ys);
  counts.score = counts.pairs - counts.tied_x - counts.tied_y + counts.tied_both - 2 * swaps;
  return counts;
}

double spearman_rho(std::span<double const> x, std::span<double const> y)
{
  if (x.size() != y.size() || x.size() < 2) {
    throw ParamOutOfRange("Spearman's rho needs two equally long samples of size >= 2");
  }
  std::vector<double> const rx = average_ranks(x);
  std::vector<double> const ry = average_ranks(y);
  double const mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    double const dx = rx[i] - mean;
    double const dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    return 0.0;
  }
  return sxy / std::sqrt(sxx * syy);
}

double ks_uniform_statistic(std::span<double const> x)
{
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  double const n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double const f = std::clamp(sorted[i], 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

EmpiricalCoefficients empirical_coefficients(SampleBatch const &batch, std::vector<double> const &lambda_thresholds)
{
  std::size_t const n = batch.size();
  if (batch.v.size() != n) {
    throw DegenerateSample("sample has mismatched u and v columns");
  }
  if (n < 10) {
    throw DegenerateSample("need at least 10 pairs, got " + std::to_string(n));
  }
  auto constant = [](std::vector<double> const &x) {
    return std::all_of(x.begin(), x.end(), [&x](double value) { return value == x.front(); });
  };
  if (constant(batch.u) || constant(batch.v)) {
    std::string const which = constant(batch.u) ? "u" : "v";
    throw DegenerateSample("all " + which + " values are identical");
  }
  for (double const t : lambda_thresholds) {
    if (!(t > 0.0 && t < 1.0)) {
      throw ParamOutOfRange("tail thresholds must lie in (0,1)");
    }
  }

  EmpiricalCoefficients out;
  out.rho = spearman_rho(batch.u, batch.v);
  out.tau = kendall_counts(batch.u, batch.v).tau();

  double const mu = median(batch.u);
  double const mv = median(batch.v);
  double concordance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    concordance += sign(batch.u[i] - mu) * sign(batch.v[i] - mv);
  }
  out.beta = concordance / static_cast<double>(n);

  std::vector<double> const ru = average_ranks(batch.u);
  std::vector<double> const rv = average_ranks(batch.v);
  double const scale = static_cast<double>(n + 1);
  std::vector<double> thresholds = lambda_thresholds;
  std::sort(thresholds.begin(), thresholds.end());
  for (double const t : thresholds) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i) {
      below += (ru[i] / scale <= t && rv[i] / scale <= t) ? 1 : 0;
    }
    double const diagonal = static_cast<double>(below) / static_cast<double>(n);
    double const estimate = below == 0 ? -1.0 : 2.0 - std::log(diagonal) / std::log(t);
    out.lambda_by_threshold.push_back({t, std::clamp(estimate, -1.0, 1.0)});
  }
  if (!out.lambda_by_threshold.empty()) {
    out.lambda = std::clamp(out.lambda_by_threshold.back().lambda, 0.0, 1.0);
  }
  return out;
}

} // namespace evcop
