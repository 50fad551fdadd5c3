#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumgap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputInvalid = 2,
  kHypothesisViolated = 3,  // only with --strict
  kFalsification = 4,
};

/// Runs one command line (args excludes the program name). The report goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumgap::cli
