#ifndef NETMAINT_TOOLS_CLI_HPP_
#define NETMAINT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace netmaint::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kBudget = 3,
  kPrecondition = 4,
};

// Runs one command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace netmaint::cli

#endif  // NETMAINT_TOOLS_CLI_HPP_
