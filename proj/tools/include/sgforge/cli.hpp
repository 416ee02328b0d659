#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgforge::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 ok, 1 usage or input error, 2 verification found violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgforge::cli
