#pragma once

#include <iosfwd>

namespace spirallike::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the spirallike command line.  Normal output goes to `out` unless --output
/// names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace spirallike::cli
