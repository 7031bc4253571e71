// Command-line driver: one JSON report on the output stream, diagnostics on err.
#pragma once

#include <iosfwd>

namespace qmod {

enum ExitCode { exit_ok = 0, exit_failed = 1, exit_input = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmod
