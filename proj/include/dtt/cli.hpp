// SPDX-License-Identifier: Apache-2.0

#ifndef DTT_CLI_HPP
#define DTT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dtt {

// Runs one CLI invocation.  `args` excludes the program name.
// Exit codes: 0 success/valid/found, 1 rejected/countermodel/not-found,
// 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dtt

#endif  // DTT_CLI_HPP
