#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chib {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdict = 1, ///< non-member, violated audit, improper coloring, failed suite
  kExitUsage = 2,   ///< bad arguments or unreadable input
  kExitBudget = 3,  ///< an exact solve ran out of budget
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace chib
