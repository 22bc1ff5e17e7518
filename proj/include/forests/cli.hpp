// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_CLI_HPP_
#define FORESTS_CLI_HPP_

#include <string>
#include <vector>

namespace forests {

struct CliResult {
    int exit_code = 0;       // 0 ok, 1 usage, 2 data, 3 numerical/convergence
    std::string output;      // goes to stdout
    std::string diagnostics; // goes to stderr
};

/// Runs one CLI invocation. stdin_text is consumed when --input is absent.
CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "");

}  // namespace forests

#endif  // FORESTS_CLI_HPP_
