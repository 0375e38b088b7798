#pragma once

#include <iosfwd>

namespace wordrank::cli {

/// Exit codes: 0 success, 1 runtime or data failure, 2 usage or configuration failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wordrank::cli
