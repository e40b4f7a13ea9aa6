#pragma once

#include <iosfwd>

namespace hnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point shared by the executable and the end-to-end tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hnet::cli
