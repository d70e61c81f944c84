#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relalg::cli {

/// Runs one invocation (arguments exclude the program name). Returns 0 on
/// success, 1 on domain errors (reported as "ERROR:<CODE>:<message>" on
/// `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relalg::cli
