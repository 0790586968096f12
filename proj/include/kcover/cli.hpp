#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcover::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,           ///< certified cover, feasible cover, solved instance
  rejected = 1,     ///< infeasible or uncertified
  usage_error = 2,  ///< bad flags or arguments
  resource_cap = 3, ///< enumeration cap, node budget or pivot limit reached
  input_error = 4,  ///< unreadable or malformed graph/cover file
};

/// Runs the command line `args` (args[0] is the program name) and writes the
/// report to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcover::cli
