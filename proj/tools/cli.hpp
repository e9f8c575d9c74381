#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolift::cli {

enum ExitCode { Ok = 0, VerifyFailed = 1, Usage = 2, Cap = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolift::cli
