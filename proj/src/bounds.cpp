#include "evcop/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace evcop {

namespace {

void require_unit(double x, char const *what)
{
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ParamOutOfRange(std::string(what) + " must lie in [0,1]");
  }
}

} // namespace

double pointwise_lower(double lambda, double u, double v)
{
  require_unit(lambda, "tail coefficient");
  if (u <= 0.0 || v <= 0.0) {
    return 0.0;
  }
  return std::min(std::pow(u, 1.0 - lambda) * v, u * std::pow(v, 1.0 - lambda));
}

double pointwise_upper(double a, double b, double u, double v)
{
  if (!(a >= 0.0 && b >= 0.0 && a + b <= 1.0 + 1e-12)) {
    throw ParamOutOfRange("tangent parameters need a,b >= 0 and a+b <= 1");
  }
  if (u <= 0.0 || v <= 0.0) {
    return 0.0;
  }
  return std::min({u, v, std::pow(u, 1.0 - a) * std::pow(v, 1.0 - b)});
}

EnvelopeCheck check_envelope(EvCopula const &C, int grid)
{
  if (grid < 2) {
    throw ParamOutOfRange("envelope check needs grid >= 2");
  }
  EnvelopeCheck out;
  out.grid = grid;
  out.lambda = C.lambda();
  out.tangent = tangent_at_half(C.dependence());
  for (int i = 0; i < grid; ++i) {
    double const u = static_cast<double>(i) / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      double const v = static_cast<double>(j) / (grid - 1);
      double const c = C(u, v);
      out.max_lower_violation = std::max(out.max_lower_violation, pointwise_lower(out.lambda, u, v) - c);
      out.max_upper_violation =
        std::max(out.max_upper_violation, c - pointwise_upper(out.tangent.a, out.tangent.b, u, v));
    }
  }
  return out;
}

BoundsInterval rho_bounds(double lambda)
{
  require_unit(lambda, "tail coefficient");
  double const ratio = (1.0 - lambda) / (4.0 - lambda);
  return {3.0 * lambda / (4.0 - lambda), 1.0 - 16.0 * ratio * ratio, "MO alpha=beta=lambda", "Pareto a=b=lambda/2"};
}

BoundsInterval tau_bounds(double lambda)
{
  require_unit(lambda, "tail coefficient");
  return {lambda / (2.0 - lambda), lambda, "MO alpha=beta=lambda", "Pareto a=b=lambda/2"};
}

std::pair<double, double> classical_region(double tau)
{
  if (!(tau >= -1.0 && tau <= 1.0)) {
    throw ParamOutOfRange("tau must lie in [-1,1]");
  }
  if (tau >= 0.0) {
    return {(3.0 * tau - 1.0) / 2.0, (1.0 + 2.0 * tau - tau * tau) / 2.0};
  }
  return {(tau * tau + 2.0 * tau - 1.0) / 2.0, (1.0 + 3.0 * tau) / 2.0};
}

double InequalityReport::worst() const { return std::min({hutchinson_lai_lower, hutchinson_lai_upper, trutschnig}); }

InequalityReport ev_inequalities(double rho, double tau)
{
  return {
    rho - (std::sqrt(1.0 + 3.0 * tau) - 1.0),
    std::min(1.5 * tau, 2.0 * tau - tau * tau) - rho,
    rho - 3.0 * tau / (2.0 + tau),
  };
}

double lambda_from_blomqvist(double beta)
{
  require_unit(beta, "Blomqvist beta");
  return std::log2(1.0 + beta);
}

double blomqvist_from_lambda(double lambda)
{
  require_unit(lambda, "tail coefficient");
  return std::exp2(lambda) - 1.0;
}

std::string to_string(CorpusKind kind)
{
  switch (kind) {
  case CorpusKind::PiecewiseLinear:
    return "piecewise-linear";
  case CorpusKind::MarshallOlkin:
    return "marshall-olkin";
  case CorpusKind::Gumbel:
    return "gumbel";
  case CorpusKind::Pareto:
    return "pareto";
  case CorpusKind::Mixture:
    return "mixture";
  }
  return "unknown";
}

DependenceFunction random_piecewise_linear(Rng &rng, int breakpoints)
{
  std::vector<double> ts{0.0};
  for (int i = 0; i < breakpoints; ++i) {
    ts.push_back(rng.uniform_open());
  }
  ts.push_back(1.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<double> slopes(ts.size() - 1);
  for (double &s : slopes) {
    s = 2.0 * rng.uniform() - 1.0;
  }
  std::sort(slopes.begin(), slopes.end());
  double mean = 0.0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    mean += slopes[i] * (ts[i + 1] - ts[i]);
  }
  double largest = 0.0;
  for (double &s : slopes) {
    s -= mean;
    largest = std::max(largest, std::abs(s));
  }
  if (largest > 1.0) {
    for (double &s : slopes) {
      s /= largest;
    }
  }

  std::vector<Knot> knots{{0.0, 1.0}};
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    knots.push_back({ts[i + 1], knots.back().value + slopes[i] * (ts[i + 1] - ts[i])});
  }
  knots.back().value = 1.0;
  for (Knot &k : knots) {
    k.value = std::clamp(k.value, std::max(k.t, 1.0 - k.t), 1.0);
  }
  return piecewise_linear_dependence(std::move(knots));
}

DependenceFunction mix(DependenceFunction const &first, DependenceFunction const &second, double weight)
{
  if (!first.is_piecewise_linear() || !second.is_piecewise_linear()) {
    throw ParamOutOfRange("mixtures are built from piecewise-linear dependence functions");
  }
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ParamOutOfRange("mixture weight must lie in [0,1]");
  }
  std::vector<double> ts;
  for (Knot const &k : first.knots()) {
    ts.push_back(k.t);
  }
  for (Knot const &k : second.knots()) {
    ts.push_back(k.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Knot> knots;
  for (double const t : ts) {
    knots.push_back({t, weight * first(t) + (1.0 - weight) * second(t)});
  }
  return piecewise_linear_dependence(std::move(knots));
}

namespace {

DependenceFunction random_member(CorpusKind kind, Rng &rng)
{
  switch (kind) {
  case CorpusKind::PiecewiseLinear:
    return random_piecewise_linear(rng, 2 + static_cast<int>(rng.next() % 7));
  case CorpusKind::MarshallOlkin: {
    double const alpha = rng.uniform();
    return mo_dependence(alpha, rng.uniform());
  }
  case CorpusKind::Gumbel:
    return gumbel_dependence(std::exp(rng.uniform() * std::log(30.0)));
  case CorpusKind::Pareto: {
    double const lambda = rng.uniform();
    double const share = rng.uniform();
    return pareto_dependence(lambda * share, lambda * (1.0 - share));
  }
  case CorpusKind::Mixture: {
    auto const base = random_piecewise_linear(rng, 2 + static_cast<int>(rng.next() % 7));
    auto const other = rng.uniform() < 0.5 ? random_member(CorpusKind::MarshallOlkin, rng)
                                           : random_member(CorpusKind::Pareto, rng);
    return mix(base, other, rng.uniform());
  }
  }
  throw ParamOutOfRange("unknown corpus kind");
}

} // namespace

std::vector<CorpusItem> random_corpus(int n, std::uint64_t seed)
{
  constexpr CorpusKind kinds[] = {CorpusKind::PiecewiseLinear, CorpusKind::MarshallOlkin, CorpusKind::Gumbel,
    CorpusKind::Pareto, CorpusKind::Mixture};
  std::vector<CorpusItem> corpus;
  corpus.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    CorpusKind const kind = kinds[i % 5];
    corpus.push_back({kind, random_member(kind, rng)});
  }
  return corpus;
}

double VerificationItem::rho_margin() const { return std::min(rho - rho_interval.lo, rho_interval.hi - rho); }

double VerificationItem::tau_margin() const { return std::min(tau - tau_interval.lo, tau_interval.hi - tau); }

bool VerificationItem::pass(double interval_slack, double envelope_tol, double inequality_tol) const
{
  return rho_margin() >= -interval_slack && tau_margin() >= -interval_slack && envelope.ok(envelope_tol)
    && inequalities.pass(inequality_tol);
}

VerificationItem verify_one(CorpusKind kind, DependenceFunction const &A, int grid)
{
  double const lambda = lambda_from_A(A);
  double const rho = rho_numeric(A);
  double const tau = tau_numeric(A);
  return {
    kind,
    A.describe(),
    lambda,
    rho,
    tau,
    rho_bounds(lambda),
    tau_bounds(lambda),
    check_envelope(EvCopula(A), grid),
    ev_inequalities(rho, tau),
  };
}

std::size_t VerificationReport::failures() const
{
  return static_cast<std::size_t>(
    std::count_if(items.begin(), items.end(), [](VerificationItem const &item) { return !item.pass(); }));
}

VerificationReport verify_corpus(std::vector<CorpusItem> const &corpus, int grid)
{
  VerificationReport report;
  report.items.reserve(corpus.size());
  for (CorpusItem const &item : corpus) {
    report.items.push_back(verify_one(item.kind, item.A, grid));
  }
  return report;
}

} // namespace evcop
