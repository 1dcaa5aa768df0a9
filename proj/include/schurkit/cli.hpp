#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurkit::cli {

// Runs the command line given as argv-style tokens (program name excluded).
// Reports and JSON go to `out`, error messages to `err`. Returns the process
// exit code: 0 success, 1 verification failure, 2 input or budget error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurkit::cli
