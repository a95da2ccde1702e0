#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitInvariantFailure = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Runs the `chipfire` command line. `args` excludes the program name.
/// Normal output goes to `out` (unless redirected with --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
