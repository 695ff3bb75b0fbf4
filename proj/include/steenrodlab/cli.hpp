#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steenrodlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to out,
// diagnostics and structured errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steenrodlab::cli
