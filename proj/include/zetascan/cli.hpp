#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetascan {

// Command-line front end; args excludes the program name. Returns the
// process exit code: 0 on success, 2 on argument or precondition errors,
// 1 on numerical failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace zetascan
