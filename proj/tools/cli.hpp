#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faf::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIndeterminate = 2,
    kProofRequired = 3,
};

/// Runs one foliation-af invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faf::cli
