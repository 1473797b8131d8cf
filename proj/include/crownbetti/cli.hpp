#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace crownbetti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Largest n accepted by `verify` (the oracle runs on every n in range).
inline constexpr std::size_t kVerifyMaxN = 6;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. `color` enables ANSI colors for PASS/FAIL markers.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

/// "1,2,3" -> {1, 2, 3}; "" -> {} (all ones). Throws UsageError.
std::vector<std::uint32_t> parse_weights(const std::string& text);

/// "3" -> {3, 3}, "2..4" -> {2, 4}. Throws UsageError.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace crownbetti::cli
