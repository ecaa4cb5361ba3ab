#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvclass {

/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 unresolved branches present under --strict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvclass
