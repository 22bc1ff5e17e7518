// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_EDGE_LIST_HPP_
#define FORESTS_EDGE_LIST_HPP_

#include <string>
#include <vector>

#include "forests/digraph.hpp"

namespace forests {

/// Parsed edge-list file. Grammar: UTF-8 lines; '#' starts a comment to end
/// of line; blank lines ignored; the first significant line is "n <count>";
/// every following line is "<tail>\t<head>\t<weight>" with 1-based ids.
struct EdgeListDocument {
    int n = 0;
    std::vector<ArcInput> records;
    std::string source;  // file path or "<stdin>"
};

EdgeListDocument parse_edge_list(const std::string& text, const std::string& source = "<string>");

WeightedDigraph to_digraph(const EdgeListDocument& doc);

/// Inverse of parsing: weights printed with shortest round-trip precision.
std::string serialize_edge_list(const WeightedDigraph& g);

}  // namespace forests

#endif  // FORESTS_EDGE_LIST_HPP_
