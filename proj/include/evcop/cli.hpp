#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evcop::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Run one command line (without the program name). Results go to `out`
/// unless `--output` is given; diagnostics go to `err`.
int run(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace evcop::cli
