#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twostack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidInput = 2;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`; diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace twostack::cli
