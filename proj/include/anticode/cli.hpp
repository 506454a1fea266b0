#pragma once

// Command-line front end. Subcommands: analyze, bounds, partition,
// reproduce, search.
//
// Exit codes: 0 success, 1 input error, 2 hypothesis or budget violation,
// 3 reproduction mismatch.
//
// ANTICODE_ENUMERATION_LIMIT, when set to a positive integer, replaces the
// default number of messages metrics() may enumerate. --limit overrides it.

#include <cstdint>
#include <iosfwd>

namespace anticode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitMismatch = 3;

inline constexpr const char* kEnumerationLimitVariable = "ANTICODE_ENUMERATION_LIMIT";

// Default limit after applying the environment override. Throws InputError
// on a malformed value.
std::uint64_t enumeration_limit_from_env();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anticode
