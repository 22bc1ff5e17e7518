// SPDX-License-Identifier: Apache-2.0
#include "forests/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "forests/components.hpp"

namespace forests {

namespace {

// Enumerates in-arc assignments: each vertex picks one incoming arc or none,
// circuits rejected as soon as the closing arc is placed. Visitor receives
// the chosen arc indices and the parent array (in-arc tail per vertex, -1
// for roots).
template <class Visitor>
void enumerate_assignments(const WeightedDigraph& g, std::int64_t cap, Visitor&& visit) {
    const int n = g.order();
    std::int64_t assignments = 1;
    for (int v = 0; v < n; ++v) {
        assignments *= static_cast<std::int64_t>(g.in_arcs(v).size()) + 1;
        if (assignments > cap)
            throw Error(ErrorCode::EnumerationCapExceeded,
                        "assignment count exceeds cap " + std::to_string(cap));
    }

    std::vector<int> parent(n, -1);
    std::vector<int> chosen;  // arc indices
    auto closes_circuit = [&](int tail, int head) {
        int v = tail;
        while (v != -1) {
            if (v == head) return true;
            v = parent[v];
        }
        return false;
    };
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            visit(chosen, parent);
            return;
        }
        self(self, v + 1);  // no incoming arc: v is a root
        for (int a : g.in_arcs(v)) {
            int tail = g.arcs()[a].tail;
            if (closes_circuit(tail, v)) continue;
            parent[v] = tail;
            chosen.push_back(a);
            self(self, v + 1);
            chosen.pop_back();
            parent[v] = -1;
        }
    };
    recurse(recurse, 0);
}

SpanningForest make_forest(const WeightedDigraph& g, const std::vector<int>& chosen,
                           const std::vector<int>& parent) {
    const int n = g.order();
    SpanningForest f;
    f.arcs.reserve(chosen.size());
    for (int a : chosen) f.arcs.push_back(g.arcs()[a]);
    std::sort(f.arcs.begin(), f.arcs.end(), [](const Arc& x, const Arc& y) {
        return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
    });
    f.tree_of.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int r = v;
        while (parent[r] != -1) r = parent[r];
        f.tree_of[v] = r + 1;
        if (r == v) f.roots.insert(v + 1);
    }
    return f;
}

bool all_weights_small_integers(const WeightedDigraph& g) {
    for (const Arc& a : g.arcs())
        if (a.weight != std::floor(a.weight) || a.weight > 1024.0) return false;
    return true;
}

// Shared accumulation over assignments; Num is long long or Rational.
template <class Num>
void accumulate_expansion(const WeightedDigraph& g, std::int64_t cap,
                          std::vector<Num>& sigma, std::vector<std::vector<Num>>& q,
                          std::vector<std::int64_t>& counts, int& max_arcs) {
    const int n = g.order();
    std::vector<Num> arc_weight;
    arc_weight.reserve(g.arcs().size());
    for (const Arc& a : g.arcs()) {
        if constexpr (std::is_same_v<Num, long long>)
            arc_weight.push_back(static_cast<long long>(a.weight));
        else
            arc_weight.push_back(exact_weight(a.weight));
    }

    sigma.assign(n + 1, Num(0));
    q.assign(n + 1, std::vector<Num>(static_cast<size_t>(n) * n, Num(0)));
    counts.assign(n + 1, 0);
    max_arcs = 0;

    std::vector<int> root(n);
    enumerate_assignments(g, cap, [&](const std::vector<int>& chosen,
                                      const std::vector<int>& parent) {
        const int k = static_cast<int>(chosen.size());
        Num w(1);
        for (int a : chosen) w *= arc_weight[a];
        sigma[k] += w;
        counts[k] += 1;
        max_arcs = std::max(max_arcs, k);
        for (int v = 0; v < n; ++v) {
            int r = v;
            while (parent[r] != -1) r = parent[r];
            root[v] = r;
        }
        for (int v = 0; v < n; ++v) q[k][static_cast<size_t>(root[v]) * n + v] += w;
    });
}

}  // namespace

Rational exact_weight(double w) {
    Rational q(w);
    q.canonicalize();
    return q;
}

std::vector<SpanningForest> enumerate_out_forests(const WeightedDigraph& g, std::int64_t cap) {
    std::vector<SpanningForest> out;
    enumerate_assignments(g, cap, [&](const std::vector<int>& chosen,
                                      const std::vector<int>& parent) {
        out.push_back(make_forest(g, chosen, parent));
    });
    std::sort(out.begin(), out.end(), [](const SpanningForest& a, const SpanningForest& b) {
        return std::lexicographical_compare(
            a.arcs.begin(), a.arcs.end(), b.arcs.begin(), b.arcs.end(),
            [](const Arc& x, const Arc& y) {
                return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
            });
    });
    return out;
}

std::vector<SpanningForest> enumerate_in_forests(const WeightedDigraph& g, std::int64_t cap) {
    std::vector<SpanningForest> forests = enumerate_out_forests(reverse(g), cap);
    const int n = g.order();
    for (SpanningForest& f : forests) {
        for (Arc& a : f.arcs) std::swap(a.tail, a.head);
        std::sort(f.arcs.begin(), f.arcs.end(), [](const Arc& x, const Arc& y) {
            return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
        });
        // Roots and tree membership carry over: the root of a converging
        // tree is the diverging root of its reversal image.
        (void)n;
    }
    std::sort(forests.begin(), forests.end(),
              [](const SpanningForest& a, const SpanningForest& b) {
                  return std::lexicographical_compare(
                      a.arcs.begin(), a.arcs.end(), b.arcs.begin(), b.arcs.end(),
                      [](const Arc& x, const Arc& y) {
                          return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
                      });
              });
    return forests;
}

OracleExpansion oracle_expansion(const WeightedDigraph& g, std::int64_t cap) {
    const int n = g.order();
    OracleExpansion result;

    int max_arcs = 0;
    if (all_weights_small_integers(g)) {
        std::vector<long long> sigma;
        std::vector<std::vector<long long>> q;
        accumulate_expansion(g, cap, sigma, q, result.forests_by_size, max_arcs);
        for (long long s : sigma) result.sigma_exact.emplace_back(static_cast<long>(s));
        for (int k = 0; k <= max_arcs; ++k) {
            RationalMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = static_cast<long>(q[k][static_cast<size_t>(i) * n + j]);
            result.q_exact.push_back(std::move(m));
        }
    } else {
        std::vector<Rational> sigma;
        std::vector<std::vector<Rational>> q;
        accumulate_expansion(g, cap, sigma, q, result.forests_by_size, max_arcs);
        result.sigma_exact = std::move(sigma);
        for (int k = 0; k <= max_arcs; ++k) {
            RationalMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = q[k][static_cast<size_t>(i) * n + j];
            result.q_exact.push_back(std::move(m));
        }
    }
    result.sigma_exact.resize(n + 1, Rational(0));
    result.d_prime = n - max_arcs;
    result.forests_by_size.resize(n + 1, 0);
    return result;
}

namespace {

void require_source_knot(const WeightedDigraph& g, const std::set<int>& K) {
    SourceKnotInfo info = strong_components(g);
    for (const auto& knot : info.source_knots)
        if (knot == K) return;
    throw Error(ErrorCode::NotASourceKnot, "the given vertex set is not a source knot");
}

}  // namespace

KnotTreeWeights knot_tree_weights(const WeightedDigraph& g, const std::set<int>& K,
                                  std::int64_t cap) {
    require_source_knot(g, K);
    KnotTreeWeights result;
    if (K.size() == 1) {
        // Single-vertex knot: the empty tree, weight 1 by convention.
        result.per_root[*K.begin()] = 1;
        result.total = 1;
        return result;
    }

    // Restriction to K with relabeled vertices.
    std::vector<int> members(K.begin(), K.end());  // 1-based, sorted
    std::map<int, int> local;                      // 1-based global -> 1-based local
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i) + 1;
    std::vector<ArcInput> sub_arcs;
    for (const Arc& a : g.arcs()) {
        auto t = local.find(a.tail + 1), h = local.find(a.head + 1);
        if (t != local.end() && h != local.end())
            sub_arcs.emplace_back(t->second, h->second, a.weight);
    }
    WeightedDigraph sub = WeightedDigraph::build(static_cast<int>(members.size()), sub_arcs);

    const int tree_arcs = sub.order() - 1;
    for (int v : members) result.per_root[v] = 0;
    result.total = 0;
    for (const SpanningForest& f : enumerate_out_forests(sub, cap)) {
        if (static_cast<int>(f.arcs.size()) != tree_arcs) continue;
        Rational w(1);
        for (const Arc& a : f.arcs) w *= exact_weight(a.weight);
        int root_global = members[*f.roots.begin() - 1];
        result.per_root[root_global] += w;
        result.total += w;
    }
    return result;
}

Rational max_forest_reach_weight(const WeightedDigraph& g, const std::set<int>& K, int j,
                                 std::int64_t cap) {
    require_source_knot(g, K);
    if (j < 1 || j > g.order())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(j));

    // Gamma_{-K}: drop arcs with both endpoints in K.
    std::vector<ArcInput> kept;
    for (const Arc& a : g.arcs())
        if (!(K.count(a.tail + 1) && K.count(a.head + 1)))
            kept.emplace_back(a.tail + 1, a.head + 1, a.weight);
    WeightedDigraph reduced = WeightedDigraph::build(g.order(), kept);

    std::vector<SpanningForest> forests = enumerate_out_forests(reduced, cap);
    size_t max_arcs = 0;
    for (const SpanningForest& f : forests) max_arcs = std::max(max_arcs, f.arcs.size());

    Rational total(0);
    for (const SpanningForest& f : forests) {
        if (f.arcs.size() != max_arcs) continue;
        // j reachable from K along the forest's arcs.
        std::vector<std::vector<int>> children(g.order());
        for (const Arc& a : f.arcs) children[a.tail].push_back(a.head);
        std::vector<char> seen(g.order(), 0);
        std::vector<int> stack;
        for (int v : K) {
            seen[v - 1] = 1;
            stack.push_back(v - 1);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : children[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (!seen[j - 1]) continue;
        Rational w(1);
        for (const Arc& a : f.arcs) w *= exact_weight(a.weight);
        total += w;
    }
    return total;
}

}  // namespace forests
