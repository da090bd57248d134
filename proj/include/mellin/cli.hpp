#pragma once

#include <iosfwd>

namespace mellin::cli {

/// Exit codes: 0 all checks pass, 1 a mismatch, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point; writes results to `out` and diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mellin::cli
