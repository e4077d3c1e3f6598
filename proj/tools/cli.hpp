#ifndef MARKOV_TOOLS_CLI_HPP
#define MARKOV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace markov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the markov-graph command line. args excludes the program name.
/// Data goes to out, diagnostics to err; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markov::cli

#endif  // MARKOV_TOOLS_CLI_HPP
