#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radio {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // verification failure, duplicate label, infeasible ordering
  kExitUsage = 2,   // bad arguments or unparsable input
  kExitGuard = 3,   // size guard or unmet hypothesis
};

/// Runs one verb (bound, label, verify, exact, check, export-dot). args
/// excludes the program name. JSON goes to out, diagnostics to err; `-`
/// as an input path reads from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace radio
