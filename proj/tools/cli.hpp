#ifndef TAMECOUNT_CLI_HPP
#define TAMECOUNT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tamecount {

/// Dispatches one CLI invocation. args excludes the program name.
/// Returns the process exit code: 0 success, 2 usage or precondition
/// failure, 3 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tamecount

#endif
