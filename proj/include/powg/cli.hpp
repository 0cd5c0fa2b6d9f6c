#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powg {

/// Exit codes of the powg command line.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_invalid_input = 2,
    exit_resource_limit = 3,
};

/// Runs the CLI with `args` (program name excluded), writing normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powg
