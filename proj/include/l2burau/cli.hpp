#pragma once

#include <iosfwd>

namespace l2b {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_verification_failed = 2 };

/// Entry point of the l2burau tool. Machine-readable output goes to `out`
/// (or the --out file), human-readable tables and errors to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace l2b
