#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqca::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { Success = 0, Failure = 1, Usage = 2 };

/// Parses and executes one invocation; args excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pqca::cli
