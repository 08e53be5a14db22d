#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clausesearch::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInstance = 3;
inline constexpr int kExitGuard = 4;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clausesearch::cli
