#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solcm_cli {

/// Runs one command line (program name excluded) and returns the exit code:
/// 0 success, 2 bad input or usage, 3 inconsistency or internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace solcm_cli
