#include "flowroots/cli.hpp"

namespace flowroots {
int run_cli(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
    err << "not implemented\n";
    return 1;
}
}  // namespace flowroots
