#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stanley::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line. args excludes the program name.
/// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error
/// (bad flags, malformed input text, violated input preconditions).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stanley::cli
