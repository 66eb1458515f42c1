#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs one command line. args[0] is the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitgraph::cli
