#ifndef BSGAMMA_CLI_HPP
#define BSGAMMA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bsgamma::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudgetExhausted = 3,
};

/// Runs one subcommand: gamma, decompose, tensor-sim, verify-identities,
/// oracle or sweep. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace bsgamma::cli

#endif
