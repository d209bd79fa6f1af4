#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gframe {

/// Exit statuses of the command-line front end.
enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Run one command line (arguments after the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gframe
