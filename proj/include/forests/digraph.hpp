// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_DIGRAPH_HPP_
#define FORESTS_DIGRAPH_HPP_

#include <set>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "forests/error.hpp"

namespace forests {

/// One weighted arc; endpoints are 0-based internally.
struct Arc {
    int tail;
    int head;
    double weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcInput = std::tuple<int, int, double>;  // 1-based (tail, head, weight)

/// Loop-free digraph with strictly positive arc weights. Immutable after
/// construction; at most one arc per ordered vertex pair (parallel input
/// arcs are merged by weight addition). Vertex ids are 1-based in the
/// public interface and 0-based in stored arcs and matrices.
class WeightedDigraph {
public:
    static WeightedDigraph build(int n, const std::vector<ArcInput>& arc_list);

    int order() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Weight of arc (tail, head), 0-based endpoints; 0 when absent.
    double weight(int tail, int head) const;

    const std::vector<int>& out_arcs(int v) const { return out_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_[v]; }

    friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

private:
    WeightedDigraph(int n, std::vector<Arc> arcs);

    int n_;
    std::vector<Arc> arcs_;  // sorted by (tail, head)
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Column Laplacian: l_ij = -w_ij for j != i, l_ii = total in-weight of i.
/// Every column sums to zero.
Eigen::MatrixXd laplacian(const WeightedDigraph& g);

/// Arc-reversal image, weights preserved.
WeightedDigraph reverse(const WeightedDigraph& g);

/// Vertices reachable from i (1-based), including i itself.
std::set<int> reachable(const WeightedDigraph& g, int i);

/// Reachability bitmap from 0-based source; skip_vertex (0-based) is treated
/// as deleted when >= 0.
std::vector<char> reachable_mask(const WeightedDigraph& g, int source, int skip_vertex = -1);

/// True iff every path from i to t passes through k (1-based, all distinct).
/// Requires that t be reachable from i at all.
bool is_cutpoint(const WeightedDigraph& g, int k, int i, int t);

}  // namespace forests

#endif  // FORESTS_DIGRAPH_HPP_
