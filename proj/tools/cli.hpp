#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspgate::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNumericFailure = 2;
inline constexpr int kExitRejected = 3;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspgate::cli
