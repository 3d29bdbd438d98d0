#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathpairs::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pathpairs` tool. Subcommands: compute, table, gf,
/// verify. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with arguments excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathpairs::cli
