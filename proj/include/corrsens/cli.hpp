#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corrsens {

// Command dispatch for the corrsens tool. `args` excludes the program name.
// Returns 0 on success, 1 on input errors, 2 on internal invariant
// violations.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace corrsens
