#pragma once

#include "evcop/errors.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace evcop {

// Convention: A(t) = -ln C(exp(-(1-t)), exp(-t)), so the copula is
// C(u,v) = exp{(ln u + ln v) A(ln v / (ln u + ln v))}.

struct Knot
{
  double t;
  double value;
};

/// A point in (0,1) where the one-sided slopes of A differ.
struct Kink
{
  double t;
  double left_slope;
  double right_slope;

  double jump() const { return right_slope - left_slope; }
};

struct MarshallOlkin
{
  double alpha;
  double beta;
};

struct Gumbel
{
  double theta;
};

/// Upper envelope of the lines 1-t, t and (1-a)(1-t) + (1-b)t.
struct ParetoFamily
{
  double a;
  double b;
};

struct PiecewiseLinear
{
  std::vector<Knot> knots;
};

enum class Side { Left, Right };

enum class Constraint { Endpoint, LowerEnvelope, UpperEnvelope, Convexity, Ordering };

struct Violation
{
  double t;
  Constraint constraint;
  double magnitude;
};

struct ValidationReport
{
  bool valid = true;
  std::vector<Violation> violations;

  void add(double t, Constraint c, double magnitude)
  {
    violations.push_back({t, c, magnitude});
    valid = false;
  }
};

std::string to_string(Constraint c);

class InvalidDependenceFunction : public Error
{
public:
  explicit InvalidDependenceFunction(ValidationReport report);
  ValidationReport const &report() const { return report_; }

private:
  ValidationReport report_;
};

/// A validated Pickands dependence function. Immutable after construction;
/// only the factory functions below can build one.
class DependenceFunction
{
public:
  using Family = std::variant<MarshallOlkin, Gumbel, ParetoFamily, PiecewiseLinear>;

  double operator()(double t) const;
  /// One-sided derivative. Away from kinks both sides agree.
  double derivative(double t, Side side = Side::Right) const;
  /// A'' where the function is twice differentiable; nullopt on a kink.
  std::optional<double> second_derivative(double t) const;

  std::span<Kink const> kinks() const { return kinks_; }
  std::vector<double> kink_locations() const;
  Family const &family() const { return family_; }
  bool is_piecewise_linear() const { return !std::holds_alternative<Gumbel>(family_); }
  /// Breakpoints (including both endpoints) for the piecewise-linear families.
  std::span<Knot const> knots() const { return knots_; }
  std::string describe() const;

  friend DependenceFunction mo_dependence(double alpha, double beta);
  friend DependenceFunction gumbel_dependence(double theta);
  friend DependenceFunction pareto_dependence(double a, double b);
  friend DependenceFunction piecewise_linear_dependence(std::vector<Knot> knots);

private:
  DependenceFunction(Family family, std::vector<Knot> knots);

  Family family_;
  std::vector<Knot> knots_;
  std::vector<double> slopes_;
  std::vector<Kink> kinks_;
};

/// A(t) = 1 - min{beta t, alpha (1-t)}.
DependenceFunction mo_dependence(double alpha, double beta);
/// A(t) = ((1-t)^theta + t^theta)^(1/theta), theta >= 1.
DependenceFunction gumbel_dependence(double theta);
/// A(t) = max{1-t, t, (1-a)(1-t) + (1-b)t}, a,b >= 0, a+b <= 1.
DependenceFunction pareto_dependence(double a, double b);
/// Linear interpolant through `knots`; throws InvalidDependenceFunction if it
/// is not a valid dependence function.
DependenceFunction piecewise_linear_dependence(std::vector<Knot> knots);

/// Abscissae of the corners of the Pareto envelope, where the tangent line
/// meets 1-t and t respectively.
std::pair<double, double> pareto_corners(double a, double b);

inline constexpr int kDefaultValidationGrid = 2048;
inline constexpr double kValidationTol = 1e-9;

/// Check A(0)=A(1)=1, max{t,1-t} <= A <= 1 and convexity on a uniform grid
/// of `grid_size` points merged with `extra_points`.
ValidationReport validate(std::function<double(double)> const &A, int grid_size = kDefaultValidationGrid,
  std::span<double const> extra_points = {});
ValidationReport validate(DependenceFunction const &A, int grid_size = kDefaultValidationGrid);

struct Tangent
{
  double a;
  double b;
};

/// Supporting line s = (1-a)(1-t) + (1-b)t of A at t = 1/2. Its slope a-b is
/// the midpoint of the subdifferential at 1/2, so a+b = 2(1 - A(1/2)).
Tangent tangent_at_half(DependenceFunction const &A);

} // namespace evcop
