#ifndef SETPAT_TOOLS_SETPAT_CLI_HPP
#define SETPAT_TOOLS_SETPAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace setpat::cli {

enum ExitCode : int {
  kHolds = 0,
  kDoesNotHold = 1,
  kUsageError = 2,
  kVerificationMismatch = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; a positional "-" reads the next line of `in`.
int run_command(const std::vector<std::string> &args, std::istream &in,
                std::ostream &out, std::ostream &err);

} // namespace setpat::cli

#endif
