#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Environment variable holding the default seed of randomized commands.
inline constexpr const char *kSeedVariable = "TURAN_SEED";

// Exit codes.
inline constexpr int kExitOk = 0;
/// A check failed, or the answer to a decision command is "no".
inline constexpr int kExitFailed = 1;
/// Bad usage or unreadable input.
inline constexpr int kExitUsage = 2;
/// A search ran out of budget; the result is inconclusive or a bound.
inline constexpr int kExitInconclusive = 3;

/// FNV-1a 64-bit digest, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace turan
