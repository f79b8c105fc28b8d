#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zeckvec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitLimit = 2;

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 1 invalid input, 2 cap or budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeckvec::cli
