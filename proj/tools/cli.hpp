#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symid::cli
{

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symid::cli
