#ifndef PHFIBER_TOOLS_CLI_HPP
#define PHFIBER_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace phfiber::cli {

/// Exit codes of the command-line front-end.
enum ExitCode : int { kOk = 0, kMalformedInput = 2, kDomainError = 3 };

/// Runs `ph-fiber` with the given arguments (without the program name).
/// Results go to `out` as JSON; failures go to `err` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phfiber::cli

#endif  // PHFIBER_TOOLS_CLI_HPP
