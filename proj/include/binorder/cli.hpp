#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binorder::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< a mathematical check failed
  kUsage = 2,        ///< bad arguments or an instance that does not exist
  kBudget = 3,       ///< enumeration budget or factorization cap exceeded
};

/// Runs the tool on `args` (without the program name), writing to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binorder::cli
