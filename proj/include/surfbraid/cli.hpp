// Command-line front end: decide, witness, verify, oracle, rewrite.
//
// Exit status: 2 for malformed input, 1 when a verification fails or an
// oracle reports a counterexample, 0 otherwise.

#ifndef SURFBRAID_CLI_HPP_
#define SURFBRAID_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace surfbraid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfbraid::cli

#endif  // SURFBRAID_CLI_HPP_
