#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpc::cli {

/// Runs one `tpc` subcommand. Returns 0 on success, 1 on validation errors
/// (bad flags, malformed profiles, domain violations) and 2 on solver
/// failures. Diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpc::cli
