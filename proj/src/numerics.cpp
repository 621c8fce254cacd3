#include "evcop/numerics.hpp"

#include "evcop/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace evcop {

namespace {

// Kronrod abscissae on [-1,1] (nonnegative half); odd indices are the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
  0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
  0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
  0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
  0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
  0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
  0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
  0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
  0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
  0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kMaxIntervals = 200000;

struct Interval
{
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(Interval const &other) const { return error < other.error; }
};

double checked(RealFunction const &f, double x)
{
  double const y = f(x);
  if (!std::isfinite(y)) {
    throw NonFinite("integrand is not finite at t = " + std::to_string(x));
  }
  return y;
}

Interval kronrod15(RealFunction const &f, double a, double b, int depth)
{
  double const center = 0.5 * (a + b);
  double const half = 0.5 * (b - a);
  double const fc = checked(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    double const dx = half * kKronrodNodes[j];
    double const sum = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * sum;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

} // namespace

double integrate(RealFunction const &f, QuadratureSpec const &spec)
{
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1) {
    throw ParamOutOfRange("quadrature tolerances must be positive and max_depth >= 1");
  }
  std::vector<double> edges{0.0};
  for (double const s : spec.split_points) {
    if (!(s > edges.back()) || !(s < 1.0)) {
      throw ParamOutOfRange("split points must be strictly increasing inside (0,1)");
    }
    edges.push_back(s);
  }
  edges.push_back(1.0);

  std::priority_queue<Interval> work;
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Interval const panel = kronrod15(f, edges[i], edges[i + 1], 0);
    total += panel.value;
    total_error += panel.error;
    work.push(panel);
  }

  while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    Interval const worst = work.top();
    if (worst.depth >= spec.max_depth || work.size() >= kMaxIntervals) {
      throw NonConvergent("quadrature did not converge near t = " + std::to_string(0.5 * (worst.a + worst.b)));
    }
    work.pop();
    double const mid = 0.5 * (worst.a + worst.b);
    Interval const left = kronrod15(f, worst.a, mid, worst.depth + 1);
    Interval const right = kronrod15(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
  }

  // Re-sum from the leaves; the running total drifts by rounding.
  double sum = 0.0;
  while (!work.empty()) {
    sum += work.top().value;
    work.pop();
  }
  return sum;
}

double find_root(RealFunction const &g, RootSpec const &spec)
{
  if (!(spec.lo < spec.hi) || !(spec.tol > 0.0)) {
    throw ParamOutOfRange("root bracket must satisfy lo < hi and tol > 0");
  }
  auto eval = [&g](double x) {
    double const y = g(x);
    if (std::isnan(y)) {
      throw NonFinite("root function is NaN at x = " + std::to_string(x));
    }
    return y;
  };

  double a = spec.lo;
  double b = spec.hi;
  double fa = eval(a);
  double fb = eval(b);
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if (std::signbit(fa) == std::signbit(fb)) {
    throw BadBracket("root function has the same sign at both ends of the bracket");
  }

  // fa, fb may be halved by the Illinois step, so keep the true values for the final pick.
  double ga = fa;
  double gb = fb;
  int last_side = 0;
  bool bisect = false;
  for (int iter = 0; iter < spec.max_iter; ++iter) {
    double const width = b - a;
    double x = 0.5 * (a + b);
    if (!bisect && std::isfinite(fa) && std::isfinite(fb)) {
      double const secant = (a * fb - b * fa) / (fb - fa);
      if (secant > a && secant < b) {
        x = secant;
      }
    }
    double const fx = eval(x);
    if (std::abs(fx) <= spec.tol) {
      return x;
    }
    if (std::signbit(fx) == std::signbit(ga)) {
      a = x;
      fa = ga = fx;
      if (last_side == -1) {
        fb *= 0.5;
      }
      last_side = -1;
    }
    else {
      b = x;
      fb = gb = fx;
      if (last_side == 1) {
        fa *= 0.5;
      }
      last_side = 1;
    }
    if (b - a <= spec.tol) {
      return std::abs(ga) <= std::abs(gb) ? a : b;
    }
    bisect = (b - a) > 0.5 * width;
  }
  throw NonConvergent("root finding exceeded max_iter");
}

double invert_monotone_cdf(RealFunction const &h, double p, double lo, double hi, double tol)
{
  if (!(lo < hi) || !(tol > 0.0)) {
    throw ParamOutOfRange("inversion domain must satisfy lo < hi and tol > 0");
  }
  constexpr double kSlack = 1e-12;
  double const h_lo = h(lo);
  double const h_hi = h(hi);
  if (!(p >= h_lo - kSlack) || !(p <= h_hi + kSlack)) {
    throw OutOfRange("probability " + std::to_string(p) + " outside the range of the function");
  }
  if (h_lo >= p) {
    return lo;
  }
  if (h_hi < p) {
    return hi;
  }
  // Invariant h(a) < p <= h(b). Illinois steps on h - p; if three steps in a
  // row fail to halve the bracket, bisect once. At a jump the secant keeps
  // landing on one side and the bisections close in on the jump location.
  double a = lo;
  double b = hi;
  double fa = h_lo - p;
  double fb = h_hi - p;
  int last_side = 0;
  int slow_steps = 0;
  double reference_width = b - a;
  while (b - a > tol) {
    double x = 0.5 * (a + b);
    if (slow_steps < 3 && fb > fa) {
      double const secant = a - fa * (b - a) / (fb - fa);
      if (secant > a && secant < b) {
        x = secant;
      }
    }
    if (x <= a || x >= b) {
      break;
    }
    double const fx = h(x) - p;
    if (fx >= 0.0) {
      b = x;
      fb = fx;
      if (last_side == 1) {
        fa *= 0.5;
      }
      last_side = 1;
    }
    else {
      a = x;
      fa = fx;
      if (last_side == -1) {
        fb *= 0.5;
      }
      last_side = -1;
    }
    if (b - a <= 0.5 * reference_width) {
      reference_width = b - a;
      slow_steps = 0;
    }
    else if (++slow_steps > 3) {
      reference_width = b - a;
      slow_steps = 0;
    }
  }
  return b;
}

} // namespace evcop
