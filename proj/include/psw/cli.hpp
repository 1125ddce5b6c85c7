#ifndef PSW_CLI_HPP
#define PSW_CLI_HPP

#include <string>
#include <vector>

namespace psw {

// exit codes: 0 success/pass, 1 validation failure or refuted claim,
// 2 usage error, 3 infeasible (named inequality)
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace psw

#endif
