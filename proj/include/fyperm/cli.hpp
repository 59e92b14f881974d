#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fyperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output is
/// deterministic given the arguments unless --entropy is passed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fyperm::cli
