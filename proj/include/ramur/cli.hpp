#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramur::cli {

// Exit codes: 0 pass, 1 axiom or model failure, 2 malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line given the argument list (no program name). Reports
/// go to `out`, diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ramur::cli
