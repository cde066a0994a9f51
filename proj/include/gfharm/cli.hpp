#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfharm {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitPass = 0,
    kExitVerificationFailure = 1,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitInternal = 4,
};

/// Runs the CLI on `args` (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfharm
