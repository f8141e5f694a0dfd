#ifndef PTM_CLI_HPP
#define PTM_CLI_HPP

#include <string>
#include <vector>

namespace ptm::cli {

/// Runs the ptm command line. Returns 0 on success, 1 on validation
/// failure, 2 on usage error. Output goes to stdout.
int run(std::vector<std::string> args);

}  // namespace ptm::cli

#endif  // PTM_CLI_HPP
