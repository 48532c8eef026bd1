#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zroupoid {

/// Exit codes of the command-line front end.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Standard output is
/// written only once the command has fully succeeded or failed, so JSON is
/// never truncated; diagnostics go to `err`. `in` backs the "-" path.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace zroupoid
