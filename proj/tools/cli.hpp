#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace faircheck::cli {

/// Runs one command line (without the program name). Returns 0 when the
/// checked property holds, 1 when it fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faircheck::cli
