#ifndef NU2SIGMA_CLI_HPP
#define NU2SIGMA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nu2sigma::cli {

/// Runs the tool on args (excluding the program name, in natural order),
/// writing to the given streams. Returns the process exit code: 0 success,
/// 1 usage or input error, 2 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace nu2sigma::cli

#endif
