#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcensus::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kIndeterminate = 3,
};

/// Runs one command. `args` excludes the program name. Machine output
/// (--json) goes to `out` as a single JSON object; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcensus::cli
