#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohconf {

// Runs the command line given as argv-style arguments (without the program
// name). Returns the process exit code: 0 when every requested check passed,
// 1 when a verification or check failed, 2 on usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohconf
