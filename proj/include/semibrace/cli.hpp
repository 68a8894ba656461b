#ifndef SEMIBRACE_CLI_HPP_
#define SEMIBRACE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace semibrace {

// Exit codes: 0 ok, 1 axiom/validation failure, 2 parse error, 3 budget
// exceeded, 4 internal implication violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace semibrace

#endif  // SEMIBRACE_CLI_HPP_
