#pragma once

#include <iosfwd>

namespace weylhodge::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 2,
    kExitResource = 3,
    kExitViolation = 4,
    kExitRefused = 5,
};

/// Parses argv, runs one subcommand and writes its report to out. Errors that
/// produce no report go to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace weylhodge::cli
