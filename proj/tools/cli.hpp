#pragma once

#include <iosfwd>

namespace ivdg::cli {

/// Runs one command line. Reports go to `out` (JSON unless the command
/// emits a file), diagnostics to `err`.
/// Exit codes: 0 solved, 2 the requested object provably does not exist
/// (or the input violates the property being checked), 1 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ivdg::cli
