#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersimp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one invocation. `args` includes the program name. Artifacts go to
/// `out` (or --output), diagnostics to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersimp::cli
