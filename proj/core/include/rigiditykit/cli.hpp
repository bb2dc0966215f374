#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigiditykit {

// Full command-line surface. args excludes the program name.
// Exit status: 0 success, 1 negative analysis verdict, 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigiditykit
