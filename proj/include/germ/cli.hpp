#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace germ {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs the germ-lct command line. args excludes the program name.
// Exit codes: 0 ok, 1 mismatch in sweep/examples, 2 input error, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germ
