#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heyting {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitPrecondition = 4;

// Runs the command line `args` (program name excluded). Results go to `out`,
// diagnostics and timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heyting
