#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powerlaw::cli {

// Exit-code contract of powerlaw-lab.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitNotApplicable = 3;

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powerlaw::cli
