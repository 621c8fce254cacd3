#include "evcop/cli.hpp"

#include "evcop/bounds.hpp"
#include "evcop/coefficients.hpp"
#include "evcop/csv.hpp"
#include "evcop/montecarlo.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace evcop::cli {

namespace {

// Rounded values of the Gumbel table as published, lambda = 0.0 .. 0.9.
struct ReferenceRow
{
  double lambda;
  double theta;
  double rho;
};

constexpr ReferenceRow kGumbelReference[] = {
  {0.0, 1.000, 0.000},
  {0.1, 1.080, 0.110},
  {0.2, 1.179, 0.225},
  {0.3, 1.306, 0.342},
  {0.4, 1.475, 0.461},
  {0.5, 1.710, 0.581},
  {0.6, 2.060, 0.699},
  {0.7, 2.641, 0.808},
  {0.8, 3.802, 0.904},
  {0.9, 7.273, 0.973},
};

constexpr double kReferenceTolerance = 0.0015;

struct OutputOptions
{
  std::string output;
  std::string format = "csv";
  int precision = -1;

  char delimiter() const { return format == "tsv" ? '\t' : ','; }
};

struct FamilyOptions
{
  std::string family;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> theta;
  std::optional<double> a;
  std::optional<double> b;
  std::string knots_file;
};

void add_output_options(CLI::App &command, OutputOptions &opts)
{
  command.add_option("--output", opts.output, "write results to this file instead of stdout");
  command.add_option("--format", opts.format, "table format")->check(CLI::IsMember({"csv", "tsv"}));
  command.add_option("--precision", opts.precision, "decimals for printed values")->check(CLI::Range(0, 17));
}

void add_family_options(CLI::App &command, FamilyOptions &opts)
{
  command.add_option("--family", opts.family, "mo | gumbel | pareto | pl")
    ->required()
    ->check(CLI::IsMember({"mo", "gumbel", "pareto", "pl"}));
  command.add_option("--alpha", opts.alpha, "Marshall-Olkin alpha");
  command.add_option("--beta", opts.beta, "Marshall-Olkin beta");
  command.add_option("--theta", opts.theta, "Gumbel theta");
  command.add_option("--a", opts.a, "Pareto family a");
  command.add_option("--b", opts.b, "Pareto family b");
  command.add_option("--knots-file", opts.knots_file, "CSV with header t,A for --family pl");
}

double need(std::optional<double> const &value, char const *flag, std::string const &family)
{
  if (!value) {
    throw ParamOutOfRange(std::string("--family ") + family + " requires " + flag);
  }
  return *value;
}

DependenceFunction load_knots(std::string const &path)
{
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open knots file '" + path + "'");
  }
  return piecewise_linear_dependence(read_knots(file));
}

DependenceFunction build_family(FamilyOptions const &opts)
{
  if (opts.family == "mo") {
    return mo_dependence(need(opts.alpha, "--alpha", opts.family), need(opts.beta, "--beta", opts.family));
  }
  if (opts.family == "gumbel") {
    return gumbel_dependence(need(opts.theta, "--theta", opts.family));
  }
  if (opts.family == "pareto") {
    return pareto_dependence(need(opts.a, "--a", opts.family), need(opts.b, "--b", opts.family));
  }
  if (opts.knots_file.empty()) {
    throw ParamOutOfRange("--family pl requires --knots-file");
  }
  return load_knots(opts.knots_file);
}

std::string fixed(double x, int decimals)
{
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, x);
  return buffer;
}

std::string number(double x, int precision) { return precision < 0 ? format_real(x) : fixed(x, precision); }

char const *error_kind(Error const &e)
{
  if (dynamic_cast<DegenerateSample const *>(&e)) {
    return "DegenerateSample";
  }
  if (dynamic_cast<InvalidDependenceFunction const *>(&e)) {
    return "InvalidDependenceFunction";
  }
  if (dynamic_cast<ParamOutOfRange const *>(&e)) {
    return "ParamOutOfRange";
  }
  if (dynamic_cast<ParseError const *>(&e)) {
    return "ParseError";
  }
  if (dynamic_cast<NonConvergent const *>(&e)) {
    return "NonConvergent";
  }
  if (dynamic_cast<OutOfRange const *>(&e)) {
    return "OutOfRange";
  }
  return "Error";
}

class Sink
{
public:
  Sink(std::string const &path, std::ostream &fallback)
  {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw ParseError("cannot open output file '" + path + "'");
      }
    }
    stream_ = path.empty() ? &fallback : &file_;
  }

  std::ostream &operator*() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream *stream_;
};

// Commands --------------------------------------------------------------------

int cmd_coeffs(FamilyOptions const &family, OutputOptions const &output, std::ostream &out)
{
  DependenceFunction const A = build_family(family);
  CoefficientSet const c = coefficients(A);
  Sink sink(output.output, out);
  char const d = output.delimiter();
  *sink << "coefficient" << d << "value" << d << "method\n";
  *sink << "rho" << d << number(c.rho, output.precision) << d << to_string(c.rho_method) << '\n';
  *sink << "tau" << d << number(c.tau, output.precision) << d << to_string(c.tau_method) << '\n';
  *sink << "lambda" << d << number(c.lambda, output.precision) << d << to_string(c.lambda_method) << '\n';
  *sink << "beta" << d << number(c.beta, output.precision) << d << to_string(c.beta_method) << '\n';
  return kSuccess;
}

int cmd_gumbel_table(OutputOptions const &output, std::ostream &out, std::ostream &err)
{
  int const decimals = output.precision < 0 ? 3 : output.precision;
  Sink sink(output.output, out);
  char const d = output.delimiter();
  *sink << "lambda" << d << "theta" << d << "rho\n";
  for (int k = 0; k <= 10; ++k) {
    double const lambda = k / 10.0;
    double const theta = gumbel_theta_from_lambda(lambda);
    double const rho = std::isinf(theta) ? 1.0 : rho_numeric(gumbel_dependence(theta));
    *sink << fixed(lambda, 1) << d << fixed(theta, decimals) << d << fixed(rho, decimals) << '\n';
    if (k == 10) {
      continue;
    }
    ReferenceRow const &ref = kGumbelReference[k];
    auto const note = [&](char const *name, double computed, double published) {
      std::string const printed = fixed(computed, 3);
      if (printed != fixed(published, 3)) {
        bool const within = std::abs(computed - published) <= kReferenceTolerance;
        err << "note: lambda=" << fixed(lambda, 1) << " " << name << " " << printed << " vs published "
            << fixed(published, 3) << (within ? " (within 0.0015)" : " (OUTSIDE 0.0015)") << '\n';
      }
    };
    note("theta", theta, ref.theta);
    note("rho", rho, ref.rho);
  }
  return kSuccess;
}

int cmd_bounds_curve(double step, OutputOptions const &output, std::ostream &out)
{
  if (!(step > 0.0 && step <= 0.1)) {
    throw ParamOutOfRange("--step must lie in (0, 0.1]");
  }
  int const decimals = output.precision < 0 ? 6 : output.precision;
  Sink sink(output.output, out);
  char const d = output.delimiter();
  *sink << "lambda" << d << "rho_lo" << d << "rho_hi" << d << "rho_gumbel" << d << "tau_lo" << d << "tau_hi" << d
        << "tau_gumbel\n";
  std::vector<double> grid;
  for (int k = 0; k * step < 1.0 - 1e-9; ++k) {
    grid.push_back(k * step);
  }
  grid.push_back(1.0);
  for (double const lambda : grid) {
    BoundsInterval const rho = rho_bounds(lambda);
    BoundsInterval const tau = tau_bounds(lambda);
    double const theta = gumbel_theta_from_lambda(lambda);
    double const rho_gumbel = std::isinf(theta) ? 1.0 : rho_numeric(gumbel_dependence(theta));
    *sink << fixed(lambda, decimals) << d << fixed(rho.lo, decimals) << d << fixed(rho.hi, decimals) << d
          << fixed(rho_gumbel, decimals) << d << fixed(tau.lo, decimals) << d << fixed(tau.hi, decimals) << d
          << fixed(gumbel_tau_from_lambda(lambda), decimals) << '\n';
  }
  return kSuccess;
}

void dump_dependence(std::ostream &err, DependenceFunction const &A, char delimiter)
{
  if (A.is_piecewise_linear()) {
    write_knots(err, A.knots(), delimiter);
    return;
  }
  std::vector<Knot> sampled;
  for (int i = 0; i <= kDefaultValidationGrid; ++i) {
    double const t = static_cast<double>(i) / kDefaultValidationGrid;
    sampled.push_back({t, A(t)});
  }
  write_knots(err, sampled, delimiter);
}

int cmd_verify(int n_random, std::uint64_t seed, int grid, std::string const &knots_file, OutputOptions const &output,
  std::ostream &out, std::ostream &err)
{
  if (n_random < 1) {
    throw ParamOutOfRange("--n-random must be >= 1");
  }
  if (grid < 2) {
    throw ParamOutOfRange("--grid must be >= 2");
  }
  std::vector<CorpusItem> corpus;
  if (!knots_file.empty()) {
    corpus.push_back({CorpusKind::PiecewiseLinear, load_knots(knots_file)});
  }
  for (CorpusItem &item : random_corpus(n_random, seed)) {
    corpus.push_back(std::move(item));
  }
  VerificationReport const report = verify_corpus(corpus, grid);

  Sink sink(output.output, out);
  char const d = output.delimiter();
  int const p = output.precision;
  *sink << "index" << d << "kind" << d << "lambda" << d << "rho" << d << "tau" << d << "rho_lo" << d << "rho_hi" << d
        << "tau_lo" << d << "tau_hi" << d << "rho_margin" << d << "tau_margin" << d << "envelope_lower_violation"
        << d << "envelope_upper_violation" << d << "inequality_margin" << d << "pass\n";
  struct Worst
  {
    std::size_t count = 0;
    double rho_margin = INFINITY;
    double tau_margin = INFINITY;
    double envelope = 0.0;
    double inequality = INFINITY;
  };
  std::map<std::string, Worst> by_kind;
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    VerificationItem const &item = report.items[i];
    double const envelope = std::max(item.envelope.max_lower_violation, item.envelope.max_upper_violation);
    *sink << i << d << to_string(item.kind) << d << number(item.lambda, p) << d << number(item.rho, p) << d
          << number(item.tau, p) << d << number(item.rho_interval.lo, p) << d << number(item.rho_interval.hi, p) << d
          << number(item.tau_interval.lo, p) << d << number(item.tau_interval.hi, p) << d
          << number(item.rho_margin(), p) << d << number(item.tau_margin(), p) << d
          << number(item.envelope.max_lower_violation, p) << d << number(item.envelope.max_upper_violation, p) << d
          << number(item.inequalities.worst(), p) << d << (item.pass() ? "yes" : "no") << '\n';
    Worst &w = by_kind[to_string(item.kind)];
    ++w.count;
    w.rho_margin = std::min(w.rho_margin, item.rho_margin());
    w.tau_margin = std::min(w.tau_margin, item.tau_margin());
    w.envelope = std::max(w.envelope, envelope);
    w.inequality = std::min(w.inequality, item.inequalities.worst());
    if (!item.pass()) {
      err << "# violation at index " << i << ": " << item.description << '\n';
      dump_dependence(err, corpus[i].A, d);
    }
  }
  *sink << '\n'
        << "kind" << d << "count" << d << "worst_rho_margin" << d << "worst_tau_margin" << d
        << "worst_envelope_violation" << d << "worst_inequality_margin\n";
  for (auto const &[kind, w] : by_kind) {
    *sink << kind << d << w.count << d << number(w.rho_margin, p) << d << number(w.tau_margin, p) << d
          << number(w.envelope, p) << d << number(w.inequality, p) << '\n';
  }
  std::size_t const failures = report.failures();
  err << (failures == 0 ? "verify: all " : "verify: FAILED ") << (failures == 0 ? report.items.size() : failures)
      << (failures == 0 ? " items within bounds\n" : " items out of bounds\n");
  return failures == 0 ? kSuccess : kVerificationFailed;
}

int cmd_sample(FamilyOptions const &family, std::string const &method, std::size_t n, std::uint64_t seed,
  OutputOptions const &output, std::ostream &out)
{
  if (n < 1) {
    throw ParamOutOfRange("-n must be >= 1");
  }
  SampleBatch batch;
  if (family.family == "mo" && method != "generic") {
    batch = sample_mo(need(family.alpha, "--alpha", "mo"), need(family.beta, "--beta", "mo"), n, seed);
  }
  else {
    if (method == "exact") {
      throw ParamOutOfRange("--method exact is only available for --family mo");
    }
    batch = sample_generic(EvCopula(build_family(family)), n, seed);
  }
  Sink sink(output.output, out);
  write_batch(*sink, batch, output.delimiter());
  return kSuccess;
}

std::vector<double> parse_thresholds(std::string const &text)
{
  std::vector<double> values;
  std::stringstream stream(text);
  std::string field;
  while (std::getline(stream, field, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size()) {
        throw std::invalid_argument(field);
      }
    }
    catch (std::exception const &) {
      throw ParamOutOfRange("cannot parse tail threshold '" + field + "'");
    }
  }
  if (values.empty()) {
    throw ParamOutOfRange("--lambda-thresholds needs at least one value");
  }
  return values;
}

int cmd_estimate(std::string const &input, std::string const &thresholds, OutputOptions const &output,
  std::istream &in, std::ostream &out)
{
  std::vector<double> const levels = parse_thresholds(thresholds);
  SampleBatch batch;
  if (input.empty() || input == "-") {
    batch = read_batch(in);
  }
  else {
    std::ifstream file(input);
    if (!file) {
      throw ParseError("cannot open input file '" + input + "'");
    }
    batch = read_batch(file);
  }
  EmpiricalCoefficients const e = empirical_coefficients(batch, levels);
  Sink sink(output.output, out);
  char const d = output.delimiter();
  int const p = output.precision;
  *sink << "statistic" << d << "value\n";
  *sink << "n" << d << batch.size() << '\n';
  *sink << "rho" << d << number(e.rho, p) << '\n';
  *sink << "tau" << d << number(e.tau, p) << '\n';
  *sink << "beta" << d << number(e.beta, p) << '\n';
  for (TailEstimate const &t : e.lambda_by_threshold) {
    char label[32];
    std::snprintf(label, sizeof label, "lambda@%g", t.threshold);
    *sink << label << d << number(t.lambda, p) << '\n';
  }
  *sink << "lambda" << d << number(e.lambda, p) << '\n';
  return kSuccess;
}

} // namespace

int run(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Dependence coefficients and bounds for bivariate extreme value copulas", "evcop"};
  app.require_subcommand(1);

  FamilyOptions family;
  OutputOptions output;
  std::uint64_t seed = 0;

  CLI::App *coeffs = app.add_subcommand("coeffs", "rho, tau, lambda and beta of one copula");
  add_family_options(*coeffs, family);
  add_output_options(*coeffs, output);

  CLI::App *table = app.add_subcommand("gumbel-table", "theta and rho of the Gumbel copula for lambda = 0, 0.1, ..., 1");
  add_output_options(*table, output);

  double step = 0.01;
  CLI::App *curve = app.add_subcommand("bounds-curve", "rho and tau bounds with the Gumbel curves as functions of lambda");
  curve->add_option("--step", step, "lambda spacing, in (0, 0.1]");
  add_output_options(*curve, output);

  int n_random = 100;
  int grid = 200;
  std::string knots_file;
  CLI::App *verify = app.add_subcommand("verify", "check the bounds against a random corpus of dependence functions");
  verify->add_option("--n-random", n_random, "number of random dependence functions");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--grid", grid, "envelope grid size per axis");
  verify->add_option("--knots-file", knots_file, "extra piecewise-linear dependence function (CSV t,A)");
  add_output_options(*verify, output);

  std::size_t n = 0;
  std::string method = "auto";
  CLI::App *sample = app.add_subcommand("sample", "draw (u,v) pairs from an extreme value copula");
  add_family_options(*sample, family);
  sample->add_option("-n,--n", n, "number of pairs")->required();
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--method", method, "auto | exact | generic")->check(CLI::IsMember({"auto", "exact", "generic"}));
  add_output_options(*sample, output);

  std::string input;
  std::string thresholds = "0.9,0.95,0.99";
  CLI::App *estimate = app.add_subcommand("estimate", "rank-based estimates from a u,v sample");
  estimate->add_option("--in", input, "input CSV (default stdin)");
  estimate->add_option("--lambda-thresholds", thresholds, "comma separated thresholds in (0,1)");
  add_output_options(*estimate, output);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  }
  catch (CLI::CallForHelp const &) {
    out << app.help();
    return kSuccess;
  }
  catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (coeffs->parsed()) {
      return cmd_coeffs(family, output, out);
    }
    if (table->parsed()) {
      return cmd_gumbel_table(output, out, err);
    }
    if (curve->parsed()) {
      return cmd_bounds_curve(step, output, out);
    }
    if (verify->parsed()) {
      return cmd_verify(n_random, seed, grid, knots_file, output, out, err);
    }
    if (sample->parsed()) {
      return cmd_sample(family, method, n, seed, output, out);
    }
    if (estimate->parsed()) {
      return cmd_estimate(input, thresholds, output, in, out);
    }
  }
  catch (Error const &e) {
    err << "error (" << error_kind(e) << "): " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace evcop::cli
