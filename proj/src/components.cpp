// SPDX-License-Identifier: Apache-2.0
#include "forests/components.hpp"

#include <algorithm>
#include <set>

namespace forests {

namespace {

// Iterative Tarjan; returns 0-based component index per vertex.
std::vector<int> tarjan_scc(const WeightedDigraph& g, int& count) {
    const int n = g.order();
    std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1), scc_stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0;
    count = 0;

    struct Frame {
        int v;
        size_t arc_pos;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < g.out_arcs(v).size()) {
                int u = g.arcs()[g.out_arcs(v)[pos++]].head;
                if (index[u] == -1) {
                    index[u] = lowlink[u] = next_index++;
                    scc_stack.push_back(u);
                    on_stack[u] = 1;
                    frames.push_back({u, 0});
                } else if (on_stack[u]) {
                    lowlink[v] = std::min(lowlink[v], index[u]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    int u;
                    do {
                        u = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[u] = 0;
                        comp[u] = count;
                    } while (u != v);
                    ++count;
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().v;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
                }
            }
        }
    }
    return comp;
}

}  // namespace

SourceKnotInfo strong_components(const WeightedDigraph& g) {
    const int n = g.order();
    int count = 0;
    std::vector<int> comp = tarjan_scc(g, count);

    // Renumber components by smallest contained vertex for determinism.
    std::vector<int> min_vertex(count, n);
    for (int v = 0; v < n; ++v) min_vertex[comp[v]] = std::min(min_vertex[comp[v]], v);
    std::vector<int> order(count);
    for (int c = 0; c < count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return min_vertex[a] < min_vertex[b]; });
    std::vector<int> rank(count);
    for (int i = 0; i < count; ++i) rank[order[i]] = i;
    for (int v = 0; v < n; ++v) comp[v] = rank[comp[v]];

    SourceKnotInfo info;
    info.components.assign(count, {});
    for (int v = 0; v < n; ++v) info.components[comp[v]].insert(v + 1);

    std::set<std::pair<int, int>> cond;
    for (const Arc& a : g.arcs())
        if (comp[a.tail] != comp[a.head]) cond.insert({comp[a.tail], comp[a.head]});
    info.condensation_arcs.assign(cond.begin(), cond.end());

    std::vector<char> has_indegree(count, 0);
    for (const auto& [from, to] : info.condensation_arcs) has_indegree[to] = 1;

    std::vector<int> knot_of_comp;  // source-knot index per component, -1 otherwise
    for (int c = 0; c < count; ++c)
        if (!has_indegree[c]) info.source_knots.push_back(info.components[c]);
    info.d_prime = static_cast<int>(info.source_knots.size());

    // K_i^+ : reachable from K_i, unreachable from every other source knot.
    std::vector<std::vector<char>> reach(info.d_prime);
    for (int s = 0; s < info.d_prime; ++s) {
        std::vector<char> mask(n, 0);
        for (int v : info.source_knots[s]) {
            auto m = reachable_mask(g, v - 1);
            for (int u = 0; u < n; ++u) mask[u] |= m[u];
        }
        reach[s] = std::move(mask);
    }
    for (int s = 0; s < info.d_prime; ++s) {
        std::set<int> plus;
        for (int v = 0; v < n; ++v) {
            if (!reach[s][v]) continue;
            bool exclusive = true;
            for (int t = 0; t < info.d_prime && exclusive; ++t)
                if (t != s && reach[t][v]) exclusive = false;
            if (exclusive) plus.insert(v + 1);
        }
        info.exclusive_reach.push_back(std::move(plus));
    }
    return info;
}

std::vector<std::set<int>> vertex_bases(const WeightedDigraph& g, std::int64_t cap) {
    SourceKnotInfo info = strong_components(g);
    std::int64_t total = 1;
    for (const auto& knot : info.source_knots) {
        total *= static_cast<std::int64_t>(knot.size());
        if (total > cap)
            throw Error(ErrorCode::BasisCountOverflow,
                        "basis count exceeds cap " + std::to_string(cap));
    }
    std::vector<std::set<int>> bases{{}};
    for (const auto& knot : info.source_knots) {
        std::vector<std::set<int>> next;
        next.reserve(bases.size() * knot.size());
        for (const auto& partial : bases)
            for (int v : knot) {
                auto extended = partial;
                extended.insert(v);
                next.push_back(std::move(extended));
            }
        bases = std::move(next);
    }
    return bases;
}

bool is_strongly_connected(const WeightedDigraph& g) {
    int count = 0;
    tarjan_scc(g, count);
    return count == 1;
}

std::vector<int> standard_numeration(const SourceKnotInfo& info, int n) {
    std::vector<int> perm;
    perm.reserve(n);
    std::vector<char> placed(n, 0);
    for (const auto& knot : info.source_knots)
        for (int v : knot) {
            perm.push_back(v - 1);
            placed[v - 1] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!placed[v]) perm.push_back(v);
    return perm;
}

}  // namespace forests
