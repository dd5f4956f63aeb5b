#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dysonct {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitVerified = 0,  // identity holds (or the expected counterexample was reproduced)
  kExitFailed = 1,    // at least one instance failed
  kExitUsage = 2,     // malformed input or configuration
};

/// Runs the CLI on args (without the program name).
///   verify <identity> --n N --a LIST [--I LIST --J LIST] [...]
///   sweep <identity> --n N --amax K [--m M --jobs P --seed S ...]
///   counterexample
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,2,3" (empty string -> empty list). Throws InvalidParameters.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dysonct
