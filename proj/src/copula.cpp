#include "evcop/copula.hpp"

#include "evcop/random.hpp"

#include <algorithm>
#include <cmath>

namespace evcop {

EvCopula::EvCopula(DependenceFunction A)
  : A_(std::move(A))
  , lambda_(std::clamp(2.0 * (1.0 - A_(0.5)), 0.0, 1.0))
{}

double EvCopula::operator()(double u, double v) const
{
  if (u <= 0.0 || v <= 0.0) {
    return 0.0;
  }
  if (u >= 1.0) {
    return std::min(v, 1.0);
  }
  if (v >= 1.0) {
    return u;
  }
  double const lu = std::log(u);
  double const lv = std::log(v);
  double const s = lu + lv;
  return std::exp(s * A_(lv / s));
}

double EvCopula::partial_u(double u, double v) const
{
  if (v <= 0.0) {
    return 0.0;
  }
  if (v >= 1.0) {
    return 1.0;
  }
  // outside (0,1) in u, evaluate at the nearest representable interior point
  u = std::clamp(u, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
  double const lu = std::log(u);
  double const lv = std::log(v);
  double const s = lu + lv;
  double const t = lv / s;
  double const c = std::exp(s * A_(t));
  double const value = c / u * (A_(t) - t * A_.derivative(t, Side::Right));
  return std::clamp(value, 0.0, 1.0);
}

EvCopula copula_from_pickands(DependenceFunction A) { return EvCopula(std::move(A)); }

double max_stability_error(EvCopula const &C, double u, double v, double s)
{
  return std::abs(C(std::pow(u, s), std::pow(v, s)) - std::pow(C(u, v), s));
}

double check_max_stability(EvCopula const &C, int samples, std::uint64_t seed)
{
  if (samples < 1) {
    throw ParamOutOfRange("max-stability check needs at least one sample");
  }
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double const u = rng.uniform_open();
    double const v = rng.uniform_open();
    double const s = 10.0 * (1.0 - rng.uniform()); // (0, 10]
    worst = std::max(worst, max_stability_error(C, u, v, s));
  }
  return worst;
}

} // namespace evcop
