#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectral_cs::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kInvariantViolation = 3,
  kInapplicable = 4,
  kNumericalFailure = 5,
};

/// Runs `spectral_cs <verb> ...`; `args` excludes the program name.
/// Verbs: convert, mfunc, verify, certify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectral_cs::cli
