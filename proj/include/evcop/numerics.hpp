#pragma once

#include <functional>
#include <vector>

namespace evcop {

/// Settings for adaptive quadrature on [0,1].
///
/// `split_points` are panel boundaries (typically the kinks of a piecewise
/// smooth integrand). Each panel is refined on its own, so a kink never
/// lands inside a Gauss-Kronrod rule.
struct QuadratureSpec
{
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
  std::vector<double> split_points;
};

struct RootSpec
{
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-13;
  int max_iter = 200;
};

using RealFunction = std::function<double(double)>;

/// Integrate `f` over [0,1] with globally adaptive 7/15-point Gauss-Kronrod.
/// Returns I with |I - exact| <= abs_tol + rel_tol*|I| for piecewise smooth f.
/// Throws NonConvergent when an interval needing refinement is already at
/// max_depth, NonFinite when f returns inf/nan at a node, and ParamOutOfRange
/// for a malformed spec.
double integrate(RealFunction const &f, QuadratureSpec const &spec = {});

/// Bracketed root of a continuous g with g(lo)*g(hi) <= 0.
///
/// Illinois regula falsi with a forced bisection step whenever an iteration
/// fails to halve the bracket, so convergence is never worse than bisection.
double find_root(RealFunction const &g, RootSpec const &spec);

/// Right-continuous generalized inverse inf{v in [lo,hi] : h(v) >= p} of a
/// nondecreasing h, which may jump. At a jump straddling p the jump location
/// is returned (to within `tol`).
double invert_monotone_cdf(RealFunction const &h, double p, double lo, double hi, double tol = 1e-12);

} // namespace evcop
