#pragma once

#include <ostream>

namespace kvec::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kUsageError = 2;

/// Entry point of the `kvec` tool. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kvec::cli
