#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmul::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInapplicable = 3;
inline constexpr int kVerifyFailed = 4;

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symmul::cli
