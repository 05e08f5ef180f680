#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invcensus {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
  kExitHypothesis = 4,
};

/// Runs the `invcensus` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invcensus
