#include "evcop/pickands.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace evcop {

namespace {

constexpr double kSumSlack = 1e-12;

void require(bool ok, char const *message)
{
  if (!ok) {
    throw ParamOutOfRange(message);
  }
}

// Segment slopes for the piecewise-linear families. MO and Pareto get exact
// slopes; user knots get finite differences.
std::vector<double> knot_slopes(std::span<Knot const> knots)
{
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    slopes.push_back((knots[i + 1].value - knots[i].value) / (knots[i + 1].t - knots[i].t));
  }
  return slopes;
}

double gumbel_value(double theta, double t)
{
  double const x = 1.0 - t;
  double const m = std::max(x, t);
  double const r = std::min(x, t) / m;
  return m * std::exp(std::log1p(std::pow(r, theta)) / theta);
}

double gumbel_slope(double theta, double t)
{
  double const x = 1.0 - t;
  double const m = std::max(x, t);
  double const r = std::min(x, t) / m;
  double const g = 1.0 + std::pow(r, theta);
  return (std::pow(t / m, theta - 1.0) - std::pow(x / m, theta - 1.0)) * std::pow(g, 1.0 / theta - 1.0);
}

// A'' = (theta-1) (t(1-t))^(theta-2) g^(1/theta-2), g = t^theta + (1-t)^theta.
double gumbel_curvature(double theta, double t)
{
  if (theta == 1.0) {
    return 0.0;
  }
  double const x = 1.0 - t;
  if (t <= 0.0 || x <= 0.0) {
    if (theta < 2.0) {
      return std::numeric_limits<double>::infinity();
    }
    return theta == 2.0 ? 1.0 : 0.0;
  }
  double const m = std::max(x, t);
  double const r = std::min(x, t) / m;
  double const log_g = theta * std::log(m) + std::log1p(std::pow(r, theta));
  return (theta - 1.0) * std::exp((theta - 2.0) * (std::log(t) + std::log(x)) + (1.0 / theta - 2.0) * log_g);
}

} // namespace

std::string to_string(Constraint c)
{
  switch (c) {
  case Constraint::Endpoint:
    return "endpoint";
  case Constraint::LowerEnvelope:
    return "lower-envelope";
  case Constraint::UpperEnvelope:
    return "upper-envelope";
  case Constraint::Convexity:
    return "convexity";
  case Constraint::Ordering:
    return "knot-ordering";
  }
  return "unknown";
}

namespace {

std::string summarize(ValidationReport const &report)
{
  std::ostringstream out;
  out << "invalid dependence function: " << report.violations.size() << " violation(s)";
  if (!report.violations.empty()) {
    auto const worst = std::max_element(report.violations.begin(), report.violations.end(),
      [](Violation const &l, Violation const &r) { return l.magnitude < r.magnitude; });
    out << ", worst " << to_string(worst->constraint) << " at t=" << worst->t << " by " << worst->magnitude;
  }
  return out.str();
}

} // namespace

InvalidDependenceFunction::InvalidDependenceFunction(ValidationReport report)
  : Error(summarize(report))
  , report_(std::move(report))
{}

DependenceFunction::DependenceFunction(Family family, std::vector<Knot> knots)
  : family_(std::move(family))
  , knots_(std::move(knots))
{
  if (knots_.size() < 2) {
    return;
  }
  std::vector<double> &slopes = slopes_;
  if (auto const *mo = std::get_if<MarshallOlkin>(&family_)) {
    // two segments whenever a kink exists
    slopes = knots_.size() == 3 ? std::vector<double>{-mo->beta, mo->alpha} : std::vector<double>{0.0};
  }
  else if (auto const *pareto = std::get_if<ParetoFamily>(&family_)) {
    double const nu = pareto->a - pareto->b;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
      double const lo = knots_[i].t;
      double const hi = knots_[i + 1].t;
      double const mid = 0.5 * (lo + hi);
      double const line = (1.0 - pareto->a) * (1.0 - mid) + (1.0 - pareto->b) * mid;
      if (line >= std::max(mid, 1.0 - mid)) {
        slopes.push_back(nu);
      }
      else {
        slopes.push_back(mid < 0.5 ? -1.0 : 1.0);
      }
    }
  }
  else {
    slopes = knot_slopes(knots_);
  }
  for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
    if (std::abs(slopes[i] - slopes[i - 1]) > 1e-12) {
      kinks_.push_back({knots_[i].t, slopes[i - 1], slopes[i]});
    }
  }
}

double DependenceFunction::operator()(double t) const
{
  return std::visit(
    [this, t](auto const &f) -> double {
      using T = std::decay_t<decltype(f)>;
      if constexpr (std::is_same_v<T, MarshallOlkin>) {
        return 1.0 - std::min(f.beta * t, f.alpha * (1.0 - t));
      }
      else if constexpr (std::is_same_v<T, Gumbel>) {
        return gumbel_value(f.theta, t);
      }
      else if constexpr (std::is_same_v<T, ParetoFamily>) {
        return std::max({1.0 - t, t, (1.0 - f.a) * (1.0 - t) + (1.0 - f.b) * t});
      }
      else {
        auto it = std::upper_bound(
          knots_.begin(), knots_.end(), t, [](double x, Knot const &k) { return x < k.t; });
        if (it == knots_.begin()) {
          return knots_.front().value;
        }
        if (it == knots_.end()) {
          return knots_.back().value;
        }
        Knot const &left = *std::prev(it);
        Knot const &right = *it;
        double const w = (t - left.t) / (right.t - left.t);
        return left.value + w * (right.value - left.value);
      }
    },
    family_);
}

double DependenceFunction::derivative(double t, Side side) const
{
  if (auto const *g = std::get_if<Gumbel>(&family_)) {
    return gumbel_slope(g->theta, t);
  }
  auto const pos = side == Side::Right
    ? std::upper_bound(knots_.begin(), knots_.end(), t, [](double x, Knot const &k) { return x < k.t; })
    : std::lower_bound(knots_.begin(), knots_.end(), t, [](Knot const &k, double x) { return k.t < x; });
  auto const segment = std::distance(knots_.begin(), pos) - 1;
  auto const last = static_cast<std::ptrdiff_t>(slopes_.size()) - 1;
  return slopes_[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(segment, 0, last))];
}

std::optional<double> DependenceFunction::second_derivative(double t) const
{
  if (auto const *g = std::get_if<Gumbel>(&family_)) {
    return gumbel_curvature(g->theta, t);
  }
  for (Kink const &k : kinks_) {
    if (k.t == t) {
      return std::nullopt;
    }
  }
  return 0.0;
}

std::vector<double> DependenceFunction::kink_locations() const
{
  std::vector<double> out;
  out.reserve(kinks_.size());
  for (Kink const &k : kinks_) {
    out.push_back(k.t);
  }
  return out;
}

std::string DependenceFunction::describe() const
{
  std::ostringstream out;
  out.precision(17);
  std::visit(
    [&out](auto const &f) {
      using T = std::decay_t<decltype(f)>;
      if constexpr (std::is_same_v<T, MarshallOlkin>) {
        out << "mo(alpha=" << f.alpha << ",beta=" << f.beta << ")";
      }
      else if constexpr (std::is_same_v<T, Gumbel>) {
        out << "gumbel(theta=" << f.theta << ")";
      }
      else if constexpr (std::is_same_v<T, ParetoFamily>) {
        out << "pareto(a=" << f.a << ",b=" << f.b << ")";
      }
      else {
        out << "piecewise-linear(" << f.knots.size() << " knots)";
      }
    },
    family_);
  return out.str();
}

DependenceFunction mo_dependence(double alpha, double beta)
{
  require(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0, "Marshall-Olkin parameters must lie in [0,1]");
  std::vector<Knot> knots{{0.0, 1.0}};
  if (alpha > 0.0 && beta > 0.0) {
    double const kink = alpha / (alpha + beta);
    knots.push_back({kink, 1.0 - beta * kink});
  }
  knots.push_back({1.0, 1.0});
  return DependenceFunction(MarshallOlkin{alpha, beta}, std::move(knots));
}

DependenceFunction gumbel_dependence(double theta)
{
  require(std::isfinite(theta) && theta >= 1.0, "Gumbel parameter must be finite and >= 1");
  return DependenceFunction(Gumbel{theta}, {});
}

std::pair<double, double> pareto_corners(double a, double b)
{
  double const nu = a - b;
  double t_p = 1.0 + nu > 0.0 ? a / (1.0 + nu) : 0.5;
  double t_q = 1.0 - nu > 0.0 ? (1.0 - a) / (1.0 - nu) : 0.5;
  // On a+b = 1 the tangent passes through (1/2,1/2) and both corners merge.
  if (1.0 + nu <= 0.0) {
    t_p = t_q;
  }
  if (1.0 - nu <= 0.0) {
    t_q = t_p;
  }
  if (t_q < t_p) {
    t_p = t_q = 0.5 * (t_p + t_q);
  }
  return {t_p, t_q};
}

DependenceFunction pareto_dependence(double a, double b)
{
  require(a >= 0.0 && b >= 0.0 && a + b <= 1.0 + kSumSlack, "Pareto family needs a,b >= 0 and a+b <= 1");
  auto const [t_p, t_q] = pareto_corners(a, b);
  std::vector<Knot> knots{{0.0, 1.0}};
  if (t_p > 0.0) {
    knots.push_back({t_p, 1.0 - t_p});
  }
  if (t_q > t_p && t_q < 1.0) {
    knots.push_back({t_q, t_q});
  }
  knots.push_back({1.0, 1.0});
  return DependenceFunction(ParetoFamily{a, b}, std::move(knots));
}

DependenceFunction piecewise_linear_dependence(std::vector<Knot> knots)
{
  ValidationReport report;
  if (knots.size() < 2 || knots.front().t != 0.0 || knots.back().t != 1.0) {
    report.add(knots.empty() ? 0.0 : knots.front().t, Constraint::Ordering, 1.0);
    throw InvalidDependenceFunction(std::move(report));
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].t) || !std::isfinite(knots[i].value)) {
      report.add(knots[i].t, Constraint::Ordering, std::numeric_limits<double>::infinity());
    }
    else if (i > 0 && !(knots[i].t > knots[i - 1].t)) {
      report.add(knots[i].t, Constraint::Ordering, knots[i - 1].t - knots[i].t);
    }
  }
  if (!report.valid) {
    throw InvalidDependenceFunction(std::move(report));
  }
  PiecewiseLinear family{knots};
  DependenceFunction A(std::move(family), std::move(knots));
  report = validate(A);
  if (!report.valid) {
    throw InvalidDependenceFunction(std::move(report));
  }
  return A;
}

ValidationReport validate(std::function<double(double)> const &A, int grid_size, std::span<double const> extra_points)
{
  if (grid_size < 3) {
    throw ParamOutOfRange("validation grid needs at least 3 points");
  }
  ValidationReport report;
  double const tol = kValidationTol;

  std::vector<double> uniform(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    uniform[static_cast<std::size_t>(i)] = static_cast<double>(i) / (grid_size - 1);
  }
  std::vector<double> uniform_values(uniform.size());
  std::transform(uniform.begin(), uniform.end(), uniform_values.begin(), A);

  std::vector<double> points = uniform;
  for (double const x : extra_points) {
    if (x >= 0.0 && x <= 1.0) {
      points.push_back(x);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<double> values(points.size());
  std::transform(points.begin(), points.end(), values.begin(), A);

  for (double const end : {0.0, 1.0}) {
    double const gap = std::abs(A(end) - 1.0);
    if (!(gap <= tol)) {
      report.add(end, Constraint::Endpoint, gap);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    double const t = points[i];
    double const value = values[i];
    if (!std::isfinite(value)) {
      report.add(t, Constraint::LowerEnvelope, std::numeric_limits<double>::infinity());
      continue;
    }
    double const below = std::max(t, 1.0 - t) - value;
    if (below > tol) {
      report.add(t, Constraint::LowerEnvelope, below);
    }
    if (value - 1.0 > tol) {
      report.add(t, Constraint::UpperEnvelope, value - 1.0);
    }
  }
  // Neighbour convexity over the merged points.
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    double const span = points[i + 1] - points[i - 1];
    double const chord = ((points[i + 1] - points[i]) * values[i - 1] + (points[i] - points[i - 1]) * values[i + 1]) / span;
    if (values[i] - chord > tol) {
      report.add(points[i], Constraint::Convexity, values[i] - chord);
    }
  }
  // Midpoint convexity at dyadic spacings of the uniform grid.
  std::size_t const n = uniform.size();
  for (std::size_t step = 2; 2 * step < n; step *= 2) {
    for (std::size_t i = step; i + step < n; ++i) {
      double const excess = uniform_values[i] - 0.5 * (uniform_values[i - step] + uniform_values[i + step]);
      if (excess > tol) {
        report.add(uniform[i], Constraint::Convexity, excess);
      }
    }
  }
  return report;
}

ValidationReport validate(DependenceFunction const &A, int grid_size)
{
  std::vector<double> extra;
  for (Knot const &k : A.knots()) {
    extra.push_back(k.t);
  }
  return validate([&A](double t) { return A(t); }, grid_size, extra);
}

Tangent tangent_at_half(DependenceFunction const &A)
{
  double const lambda = std::clamp(2.0 * (1.0 - A(0.5)), 0.0, 1.0);
  double const left = A.derivative(0.5, Side::Left);
  double const right = A.derivative(0.5, Side::Right);
  double const slope = std::clamp(0.5 * (left + right), -lambda, lambda);
  return {std::max(0.0, 0.5 * (lambda + slope)), std::max(0.0, 0.5 * (lambda - slope))};
}

} // namespace evcop
