#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hypsum/series.hpp"

namespace hypsum::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNotApplicable = 2,
  kVerificationFailed = 3,
};

/// Parses "a1,a2,...;b1,b2,..." (upper parameters before ';'). Either side
/// may be empty. Throws ConfigError naming the offending token.
SeriesSpec parse_series_spec(std::string_view text);

/// Comma-separated numbers. Throws ConfigError naming the offending token.
std::vector<double> parse_number_list(std::string_view text);

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypsum::cli
