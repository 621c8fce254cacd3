#pragma once

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library's numerical routines.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

/// Composite Simpson rule on `panels` equal panels of each piece between breakpoints.
inline double simpson(std::function<double(double)> const &f, std::vector<double> breaks, int panels = 20000)
{
  breaks.insert(breaks.begin(), 0.0);
  breaks.push_back(1.0);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double const a = breaks[k];
    double const b = breaks[k + 1];
    double const h = (b - a) / (2 * panels);
    double sum = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) {
      sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    total += sum * h / 3.0;
  }
  return total;
}

/// Plain bisection, 200 halvings.
inline double bisect(std::function<double(double)> const &g, double lo, double hi)
{
  double glo = g(lo);
  for (int i = 0; i < 200; ++i) {
    double const mid = 0.5 * (lo + hi);
    double const gm = g(mid);
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    }
    else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Intersection abscissa of s = c1 + m1 t and s = c2 + m2 t.
inline double intersect(double c1, double m1, double c2, double m2) { return (c2 - c1) / (m1 - m2); }

/// Marshall-Olkin copula evaluated directly.
inline double mo_copula(double alpha, double beta, double u, double v)
{
  return std::min(std::pow(u, 1.0 - alpha) * v, u * std::pow(v, 1.0 - beta));
}

inline double central_difference(std::function<double(double)> const &f, double x, double h = 1e-6)
{
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct PairCounts
{
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x = 0;
  std::int64_t tied_y = 0;
  std::int64_t tied_both = 0;
};

/// O(n^2) enumeration of all pairs.
inline PairCounts kendall_direct(std::span<double const> x, std::span<double const> y)
{
  PairCounts c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double const dx = x[i] - x[j];
      double const dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) {
        ++c.tied_both;
        ++c.tied_x;
        ++c.tied_y;
      }
      else if (dx == 0.0) {
        ++c.tied_x;
      }
      else if (dy == 0.0) {
        ++c.tied_y;
      }
      else if ((dx > 0.0) == (dy > 0.0)) {
        ++c.concordant;
      }
      else {
        ++c.discordant;
      }
    }
  }
  return c;
}

} // namespace oracle
