#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsuper {

// Exit codes of the command-line front end.
enum CliExit {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitCache = 3,
};

// Runs one qsuper command; args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsuper
