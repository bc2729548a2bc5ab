#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pagerank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Largest graph the commands accept.
inline constexpr std::size_t kMaxNodes = 5000;

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pagerank::cli
