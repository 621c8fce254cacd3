#include "evcop/csv.hpp"

#include "evcop/errors.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace evcop {

namespace {

std::string trim(std::string s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string const &line)
{
  char const delimiter = line.find('\t') != std::string::npos && line.find(',') == std::string::npos ? '\t' : ',';
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto const end = line.find(delimiter, start);
    fields.push_back(trim(line.substr(start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return fields;
}

double parse_real(std::string const &field, std::size_t line_number)
{
  double value = 0.0;
  auto const *begin = field.data();
  auto const *end = field.data() + field.size();
  auto const [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_number) + ": cannot parse '" + field + "' as a number");
  }
  return value;
}

// Rows of a two-column numeric table under the expected header.
std::vector<std::pair<double, double>> read_pairs(std::istream &in, char const *first, char const *second)
{
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) {
      continue;
    }
    auto const fields = split(line);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != first || fields[1] != second) {
        throw ParseError(std::string("expected header '") + first + "," + second + "'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_number) + ": expected 2 columns");
    }
    rows.emplace_back(parse_real(fields[0], line_number), parse_real(fields[1], line_number));
  }
  // An empty input is an empty table; callers decide whether that is an error.
  return rows;
}

} // namespace

std::string format_real(double x)
{
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::vector<Knot> read_knots(std::istream &in)
{
  std::vector<Knot> knots;
  for (auto const &[t, value] : read_pairs(in, "t", "A")) {
    knots.push_back({t, value});
  }
  return knots;
}

void write_knots(std::ostream &out, std::span<Knot const> knots, char delimiter)
{
  out << 't' << delimiter << "A\n";
  for (Knot const &k : knots) {
    out << format_real(k.t) << delimiter << format_real(k.value) << '\n';
  }
}

SampleBatch read_batch(std::istream &in)
{
  SampleBatch batch;
  for (auto const &[u, v] : read_pairs(in, "u", "v")) {
    batch.u.push_back(u);
    batch.v.push_back(v);
  }
  return batch;
}

void write_batch(std::ostream &out, SampleBatch const &batch, char delimiter)
{
  out << 'u' << delimiter << "v\n";
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out << format_real(batch.u[i]) << delimiter << format_real(batch.v[i]) << '\n';
  }
}

} // namespace evcop
