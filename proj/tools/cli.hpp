#pragma once

#include <iosfwd>

namespace affkl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `affkl` tool with explicit streams so it can be driven
/// in-process.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affkl::cli
