#ifndef NLIE_CLI_HPP
#define NLIE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nlie {

// Exit codes: 0 success, 1 mathematical negative or counterexample,
// 2 usage error, 3 unsupported (field too small, budget exceeded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlie

#endif
