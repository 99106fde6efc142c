#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invw {

/// Runs one command line (program name excluded). Reports go to `out` as
/// "key: value" lines, or as one JSON object with --json; errors go to `err`.
/// Returns the process exit status: 0 exactly when no error occurred.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invw
