#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerpoly {

/// Exit codes: 0 every assertion holds, 1 a checked property failed,
/// 2 usage or validation error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eulerpoly
