#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric {

/// Runs one toricmazur command (arguments without the program name).
/// Returns 0 on success, 1 when a verification fails, 2 on input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
