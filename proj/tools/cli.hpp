#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irank::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInconclusive = 3,
  kScopeError = 4,
};

/// Runs one CLI invocation; args excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irank::cli
