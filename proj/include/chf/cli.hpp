#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chf::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,          // verify found a failing criterion, or an unexpected error
  kDomain = 2,           // undefined function or argument outside the domain
  kNonConvergence = 3,
  kUsage = 64,
};

/// Runs one command. argv[0] is the program name. Machine output (--json,
/// --csv) goes to `out` and is byte-identical for identical arguments and
/// environment; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chf::cli
