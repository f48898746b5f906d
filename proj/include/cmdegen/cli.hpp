#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmdegen {

// Exit codes of cm-degen.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,     // a decision came out false, or a verify check failed
  kUsage = 2,        // bad flags, ring spec or module expression
  kConsistency = 3,  // an internal certificate failed to re-validate
};

// Runs the command line `args` (without the program name). JSON and DOT go
// to `out` unless redirected to files; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmdegen
