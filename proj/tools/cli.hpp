#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qid::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,    // unreadable input, bad flags, malformed files
  kTrainingError = 2,  // fit failed
  kSchemaError = 3,    // model and features disagree
};

/// Runs the `qid` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qid::cli
