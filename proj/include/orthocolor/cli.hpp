#pragma once

#include <string>
#include <vector>

namespace orthocolor {

// Exit codes: 0 success, 1 mathematically negative result (failed
// verification, family not found), 2 usage or malformed input, 3 resource
// cap hit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapped = 3;

int run_cli(int argc, const char* const* argv);

/// Convenience for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace orthocolor
