#ifndef FLOWROOTS_CLI_HPP
#define FLOWROOTS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace flowroots {

/// Dispatches the command line. Exit codes: 0 success, 1 usage or input
/// error, 2 counterexample found by verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowroots

#endif
