#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodge::cli {

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err. Output bytes depend only on the arguments and
/// the cache file contents.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hodge::cli
