#ifndef HOLANT_CLI_HPP
#define HOLANT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace holant {

// Runs one CLI invocation (args exclude the program name) and returns the
// exit status: 0 success, 1 domain error, 2 usage error.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace holant

#endif
