#ifndef WHEELS_CLI_HPP
#define WHEELS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wheels {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // verification mismatch / violations
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;  // enumeration budget or count overflow

// Dispatches one subcommand (count, psi, table, enumerate, verify,
// distance-lemma). args excludes the program name. Output is fully
// deterministic; all diagnostics go to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wheels

#endif  // WHEELS_CLI_HPP
