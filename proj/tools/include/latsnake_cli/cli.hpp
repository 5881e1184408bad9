#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latsnake::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kInvariantViolation = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latsnake::cli
