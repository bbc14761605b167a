#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entwine {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kFail = 1, kMalformed = 2 };

/// Runs `entwine <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entwine
