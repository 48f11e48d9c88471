#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathdepth::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 usage or engine error, 2 a verify check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathdepth::cli
