#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace framelab::cli {

/// Runs the command surface against explicit streams. Exit status: 0 on
/// success / all-pass, 1 on scenario assertion failure, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framelab::cli
