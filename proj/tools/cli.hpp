#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdom::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerificationFailed = 2;
inline constexpr int kModelViolation = 3;

/// Runs one command line (without the program name) and returns its exit
/// code. JSON reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdom::cli
