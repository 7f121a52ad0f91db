#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace flexcat::cli {

/// Exit statuses.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

/// Runs one invocation. `args` excludes the program name. JSON results go
/// to `out`, diagnostics to `err`; "-" inputs are read from `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace flexcat::cli
