#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shp::cli {

// Parses args (without the program name) and runs the command.
// Exit status: 0 success, 1 a reported check failed, 2 bad usage or configuration.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shp::cli
