#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qk::cli {

// Exit-code contract shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kSemanticFailure = 1, // not a quasi-kernel / no solution within k
    kInputError = 2,      // unreadable or malformed input, unmet preconditions
};

/// Runs `qk <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qk::cli
