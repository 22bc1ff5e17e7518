// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_ORACLE_HPP_
#define FORESTS_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "forests/digraph.hpp"

namespace forests {

using Rational = mpq_class;

/// Exact n x n matrix for oracle results.
class RationalMatrix {
public:
    explicit RationalMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0) {}

    int order() const { return n_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Rational> data_;
};

/// One spanning diverging forest: every vertex has indegree <= 1 and there
/// are no circuits. roots holds the indegree-0 vertices (1-based);
/// tree_of[v] is the 1-based root of the tree containing 0-based v.
struct SpanningForest {
    std::vector<Arc> arcs;  // sorted by (tail, head)
    std::set<int> roots;
    std::vector<int> tree_of;
};

/// Exact counterpart of ForestExpansion, from enumeration.
struct OracleExpansion {
    std::vector<Rational> sigma_exact;       // length n+1
    std::vector<RationalMatrix> q_exact;     // Q_0..Q_{n-d'}
    std::vector<std::int64_t> forests_by_size;
    int d_prime = 0;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

/// All spanning out-forests, lexicographic by arc list. Feasibility gate:
/// the number of in-arc assignments, Π_v (id(v)+1), must not exceed cap.
std::vector<SpanningForest> enumerate_out_forests(const WeightedDigraph& g,
                                                  std::int64_t cap = kDefaultEnumerationCap);

/// In-forests via the reversal bijection; roots are outdegree-0 vertices.
std::vector<SpanningForest> enumerate_in_forests(const WeightedDigraph& g,
                                                 std::int64_t cap = kDefaultEnumerationCap);

/// Exact sigma_k and Q_k by full enumeration.
OracleExpansion oracle_expansion(const WeightedDigraph& g,
                                 std::int64_t cap = kDefaultEnumerationCap);

struct KnotTreeWeights {
    Rational total;                  // w(T)
    std::map<int, Rational> per_root;  // k in K -> w(T^k)
};

/// Weights of spanning diverging trees of the restriction of g to source
/// knot K, grouped by root.
KnotTreeWeights knot_tree_weights(const WeightedDigraph& g, const std::set<int>& K,
                                  std::int64_t cap = kDefaultEnumerationCap);

/// w(P^{K*->j}): weight of maximum out-forests of g with the arcs inside K
/// removed, in which j is reachable from some vertex of K.
Rational max_forest_reach_weight(const WeightedDigraph& g, const std::set<int>& K, int j,
                                 std::int64_t cap = kDefaultEnumerationCap);

/// Exact rational image of an arc weight (doubles are dyadic, so exact).
Rational exact_weight(double w);

}  // namespace forests

#endif  // FORESTS_ORACLE_HPP_
