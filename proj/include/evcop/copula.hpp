#pragma once

#include "evcop/pickands.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace evcop {

/// Extreme value copula C(u,v) = exp{(ln u + ln v) A(ln v / (ln u + ln v))}.
class EvCopula
{
public:
  explicit EvCopula(DependenceFunction A);

  double operator()(double u, double v) const;
  /// dC/du = (C/u)(A(t) - t A'(t)), the conditional distribution of V given U = u.
  /// On kink-induced curves the right derivative of A is used.
  double partial_u(double u, double v) const;

  DependenceFunction const &dependence() const { return A_; }
  double lambda() const { return lambda_; }
  /// C(u,u) = u^(2 - lambda).
  double diagonal_exponent() const { return 2.0 - lambda_; }

private:
  DependenceFunction A_;
  double lambda_;
};

EvCopula copula_from_pickands(DependenceFunction A);

inline double partial_u(EvCopula const &C, double u, double v) { return C.partial_u(u, v); }

/// Survival transform u + v - 1 + C(1-u, 1-v) of any copula evaluator.
template <typename Copula>
double survival(Copula const &C, double u, double v)
{
  return u + v - 1.0 + C(1.0 - u, 1.0 - v);
}

template <typename Copula>
auto survival_copula(Copula C)
{
  return [C = std::move(C)](double u, double v) { return survival(C, u, v); };
}

/// |C(u^s, v^s) - C(u,v)^s| at one point.
double max_stability_error(EvCopula const &C, double u, double v, double s);

/// Largest max-stability error over `samples` random (u, v, s), s in (0, 10].
double check_max_stability(EvCopula const &C, int samples, std::uint64_t seed);

/// Smallest C-volume over the cells of a uniform (grid+1) x (grid+1) lattice on [0,1]^2.
template <typename Copula>
double check_two_increasing(Copula const &C, int grid)
{
  if (grid < 2) {
    throw ParamOutOfRange("two-increasing check needs grid >= 2");
  }
  std::vector<double> previous(static_cast<std::size_t>(grid) + 1);
  std::vector<double> current(previous.size());
  for (int j = 0; j <= grid; ++j) {
    previous[static_cast<std::size_t>(j)] = C(0.0, static_cast<double>(j) / grid);
  }
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid; ++i) {
    double const u = static_cast<double>(i) / grid;
    for (int j = 0; j <= grid; ++j) {
      current[static_cast<std::size_t>(j)] = C(u, static_cast<double>(j) / grid);
    }
    for (std::size_t j = 1; j < current.size(); ++j) {
      worst = std::min(worst, current[j] - current[j - 1] - previous[j] + previous[j - 1]);
    }
    std::swap(previous, current);
  }
  return worst;
}

} // namespace evcop
