#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latkit {

// Runs the command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage or malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latkit
