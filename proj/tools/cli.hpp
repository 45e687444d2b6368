#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmt::cli {

/// Exit codes: 0 success, 1 domain failure, 2 I/O, parse or usage failure.
enum ExitCode : int { ok = 0, domain_failure = 1, input_failure = 2 };

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmt::cli
