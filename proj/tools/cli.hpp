// Command-line front end. Reports go to `out` as key<TAB>value lines,
// diagnostics and timing to `err`.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyreach::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polyreach::cli
