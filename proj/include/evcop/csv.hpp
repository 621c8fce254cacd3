#pragma once

#include "evcop/montecarlo.hpp"
#include "evcop/pickands.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace evcop {

/// Shortest-round-trip-safe text form: 17 significant digits.
std::string format_real(double x);

/// Knots from a two-column table with header `t,A` (comma or tab separated).
std::vector<Knot> read_knots(std::istream &in);
void write_knots(std::ostream &out, std::span<Knot const> knots, char delimiter = ',');

/// Sample pairs from a table with header `u,v`. The seed and generator of the
/// returned batch are left at their defaults.
SampleBatch read_batch(std::istream &in);
/// Header `u,v`, 17 significant digits, LF line endings.
void write_batch(std::ostream &out, SampleBatch const &batch, char delimiter = ',');

} // namespace evcop
