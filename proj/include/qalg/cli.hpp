#pragma once

#include <iosfwd>

namespace qalg {

/** Exit codes of the command line tool. */
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInput = 2, kExitResource = 3 };

/** Entry point of the `qalg` tool; returns the process exit code. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qalg
