// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_COMPONENTS_HPP_
#define FORESTS_COMPONENTS_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "forests/digraph.hpp"

namespace forests {

/// Strong components, condensation, and the source knots K_1..K_{d'} with
/// their exclusive reach sets K_i^+. All vertex sets hold 1-based ids;
/// components are sorted by smallest contained vertex id.
struct SourceKnotInfo {
    std::vector<std::set<int>> components;
    std::vector<std::pair<int, int>> condensation_arcs;  // component indices, 0-based
    std::vector<std::set<int>> source_knots;
    std::vector<std::set<int>> exclusive_reach;  // K_i^+, aligned with source_knots
    int d_prime = 0;
};

SourceKnotInfo strong_components(const WeightedDigraph& g);

/// All vertex bases: one vertex per source knot (Π|K_i| of them).
/// Throws BasisCountOverflow beyond the cap.
std::vector<std::set<int>> vertex_bases(const WeightedDigraph& g,
                                        std::int64_t cap = 1'000'000);

bool is_strongly_connected(const WeightedDigraph& g);

/// Permutation realizing the standard numeration: vertices of K_1 first,
/// then K_2, ..., then the rest. Returns old 0-based id per new position.
std::vector<int> standard_numeration(const SourceKnotInfo& info, int n);

}  // namespace forests

#endif  // FORESTS_COMPONENTS_HPP_
