#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sv::cli {

// Executes one command line (program name excluded), writing results to
// `out` and diagnostics to `err`.  Returns the process exit code:
//   0  success (for checks: the check passed)
//   1  semantic failure: bundle not Ulrich, table not natural, check failed
//   2  usage error: unknown flags, malformed expressions, out-of-range q
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sv::cli
