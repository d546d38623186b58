#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). FILE arguments that
/// are absent or "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gainrank::cli
