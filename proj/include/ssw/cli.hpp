/*
 * Command-line front end: subcommand dispatch, output formatting, and the
 * exit-code contract (0 result / 1 semantic negative / 2 domain rejection /
 * 64 usage / 65 refusal / 70 internal).  cli_run is stream-parameterized so
 * tests can drive it in-process.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ssw {

inline constexpr int kExitOk = 0;         // computed result, affirmative
inline constexpr int kExitNegative = 1;   // computed result, negative
inline constexpr int kExitDomain = 2;     // well-formed input outside the domain
inline constexpr int kExitUsage = 64;     // bad flags or unparseable input
inline constexpr int kExitRefusal = 65;   // exceeds a computation cap
inline constexpr int kExitInternal = 70;  // internal invariant failed

// args excludes the program name. Data goes to `out`, diagnostics to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ssw
