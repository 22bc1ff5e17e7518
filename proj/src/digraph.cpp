// SPDX-License-Identifier: Apache-2.0
#include "forests/digraph.hpp"

#include <algorithm>
#include <map>

namespace forests {

WeightedDigraph WeightedDigraph::build(int n, const std::vector<ArcInput>& arc_list) {
    if (n < 2)
        throw Error(ErrorCode::TooFewVertices, "need at least 2 vertices, got " + std::to_string(n));

    std::map<std::pair<int, int>, double> merged;
    for (const auto& [tail, head, weight] : arc_list) {
        if (tail < 1 || tail > n || head < 1 || head > n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "arc (" + std::to_string(tail) + "," + std::to_string(head) +
                            ") outside 1.." + std::to_string(n));
        if (tail == head)
            throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(tail));
        if (!(weight > 0.0))
            throw Error(ErrorCode::NonpositiveWeight,
                        "arc (" + std::to_string(tail) + "," + std::to_string(head) +
                            ") has weight " + std::to_string(weight));
        merged[{tail - 1, head - 1}] += weight;
    }

    std::vector<Arc> arcs;
    arcs.reserve(merged.size());
    for (const auto& [key, w] : merged) arcs.push_back({key.first, key.second, w});
    return WeightedDigraph(n, std::move(arcs));
}

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
        out_[arcs_[a].tail].push_back(a);
        in_[arcs_[a].head].push_back(a);
    }
}

double WeightedDigraph::weight(int tail, int head) const {
    for (int a : out_[tail])
        if (arcs_[a].head == head) return arcs_[a].weight;
    return 0.0;
}

Eigen::MatrixXd laplacian(const WeightedDigraph& g) {
    const int n = g.order();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const Arc& a : g.arcs()) {
        L(a.tail, a.head) -= a.weight;
        L(a.head, a.head) += a.weight;
    }
    return L;
}

WeightedDigraph reverse(const WeightedDigraph& g) {
    std::vector<ArcInput> rev;
    rev.reserve(g.arcs().size());
    for (const Arc& a : g.arcs()) rev.emplace_back(a.head + 1, a.tail + 1, a.weight);
    return WeightedDigraph::build(g.order(), rev);
}

std::vector<char> reachable_mask(const WeightedDigraph& g, int source, int skip_vertex) {
    std::vector<char> seen(g.order(), 0);
    if (source == skip_vertex) return seen;
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.out_arcs(v)) {
            int u = g.arcs()[a].head;
            if (u == skip_vertex || seen[u]) continue;
            seen[u] = 1;
            stack.push_back(u);
        }
    }
    return seen;
}

std::set<int> reachable(const WeightedDigraph& g, int i) {
    if (i < 1 || i > g.order())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(i));
    auto mask = reachable_mask(g, i - 1);
    std::set<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (mask[v]) out.insert(v + 1);
    return out;
}

bool is_cutpoint(const WeightedDigraph& g, int k, int i, int t) {
    for (int v : {k, i, t})
        if (v < 1 || v > g.order())
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    if (k == i || k == t || i == t)
        throw Error(ErrorCode::DegenerateTriple,
                    "(k,i,t) = (" + std::to_string(k) + "," + std::to_string(i) + "," +
                        std::to_string(t) + ")");
    if (!reachable_mask(g, i - 1)[t - 1]) return false;
    return !reachable_mask(g, i - 1, k - 1)[t - 1];
}

}  // namespace forests
