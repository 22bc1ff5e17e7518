// SPDX-License-Identifier: Apache-2.0
#include "forests/output.hpp"

#include <cstdio>
#include <cstdlib>

namespace forests {

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    std::string s(buf);
    if (s == "-0" || s == "-0.0") s = "0";
    return s;
}

double round_to_precision(double value, int precision) {
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

}  // namespace forests
