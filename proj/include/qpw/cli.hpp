#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpw {

inline constexpr const char* kToolName = "qpw";
inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command. `args` excludes the program name. Returns 0 when every
// check passes, 1 when a violation was found and 2 on input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpw
