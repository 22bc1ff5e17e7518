// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_OUTPUT_HPP_
#define FORESTS_OUTPUT_HPP_

#include <string>

namespace forests {

/// Locale-independent formatting with a fixed number of significant digits;
/// "-0" is normalized to "0".
std::string format_number(double value, int precision);

/// Round to the printed precision (for JSON payloads).
double round_to_precision(double value, int precision);

}  // namespace forests

#endif  // FORESTS_OUTPUT_HPP_
