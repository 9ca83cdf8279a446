#ifndef QLIFT_TOOLS_CLI_APP_HPP
#define QLIFT_TOOLS_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qlift::cli {

// Runs the command line given as argv-style arguments (without the program
// name).  Output goes to `out`, diagnostics to `err`.  Exit status: 0 on
// success, 1 on a pipeline failure (the failing stage is named), 2 on usage
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlift::cli

#endif  // QLIFT_TOOLS_CLI_APP_HPP
