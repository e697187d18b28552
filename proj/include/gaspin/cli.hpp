#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaspin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Normal output and
/// structured records go to `out`, diagnostics in text mode to `err`.
/// Returns 0 on success, 1 when a verification or domain check fails and
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gaspin::cli
