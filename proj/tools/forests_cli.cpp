// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "forests/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_text;
    bool has_input = std::find(args.begin(), args.end(), "--input") != args.end() ||
                     std::any_of(args.begin(), args.end(),
                                 [](const std::string& a) { return a.rfind("--input=", 0) == 0; });
    bool wants_data = !args.empty() && args[0][0] != '-';
    if (!has_input && wants_data)
        stdin_text.assign(std::istreambuf_iterator<char>(std::cin),
                          std::istreambuf_iterator<char>());

    forests::CliResult result = forests::run_cli(args, stdin_text);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
