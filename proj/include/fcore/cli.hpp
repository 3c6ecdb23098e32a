#ifndef FCORE_CLI_HPP
#define FCORE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fcore::cli {

/// Exit codes: 0 yes, 1 no, 2 unknown, 3 usage or parse error, 4 I/O error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitIo = 4;

/// Runs one invocation; args excludes the program name. Decision
/// subcommands print a final machine-readable line "VERDICT: yes|no|unknown"
/// matching the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fcore::cli

#endif
