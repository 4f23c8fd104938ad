#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nrsched::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSolver = 3;

/// Runs one subcommand (`args` excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrsched::cli
