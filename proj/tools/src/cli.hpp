#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace absdil::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kMathFailure = 2 };

/// Runs one subcommand. The JSON report goes to out, diagnostics (and the
/// reproduce-s3 ledger) to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace absdil::cli
