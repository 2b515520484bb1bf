#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyonsim::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on usage or validation errors, 1 on numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyonsim::cli
