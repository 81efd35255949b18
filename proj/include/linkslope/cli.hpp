#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkslope {

/// Process exit codes of the command-line front-end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitPrecondition = 2,
  kExitParse = 3,
  /// `slope --compare` found a certificate that the two links are not concordant.
  kExitNotConcordant = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

/// Human-readable complex approximation, e.g. `0.5 - 0.866025403784i`.
std::string format_decimal(double re, double im);

}  // namespace linkslope
