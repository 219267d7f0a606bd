// The `zss` command-line front end.

#ifndef ZEROSUM_TOOLS_CLI_H_
#define ZEROSUM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace zerosum::cli {

enum ExitStatus : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kIncomplete = 3,
};

// Parses `args` (without the program name), runs one subcommand and writes
// its output to `out`, diagnostics to `err`. Returns the process exit
// status.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace zerosum::cli

#endif  // ZEROSUM_TOOLS_CLI_H_
