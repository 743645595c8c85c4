#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace savi::cli {

// Exit codes of the savi executable.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,    // command-line syntax
  kExitConfig = 2,   // invalid configuration or parameter domain
  kExitIo = 3,       // unreadable input or unwritable output
  kExitParse = 4,    // malformed input file
  kExitInternal = 5,
};

// Runs one savi invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace savi::cli
