// SPDX-License-Identifier: Apache-2.0
#include "forests/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "forests/calculus.hpp"
#include "forests/components.hpp"

namespace forests {

const char* score_method_name(ScoreMethod method) {
    switch (method) {
        case ScoreMethod::KernelMean: return "kernel_mean";
        case ScoreMethod::DanielsTree: return "daniels_tree";
        case ScoreMethod::Borda: return "borda";
    }
    return "?";
}

std::vector<Eigen::VectorXd> kernel_basis(const WeightedDigraph& g) {
    SourceKnotInfo info = strong_components(g);
    Eigen::MatrixXd jt = j_tilde(g).j_tilde;
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(info.source_knots.size());
    for (const auto& knot : info.source_knots) {
        int rep = *knot.begin();  // smallest id in the knot
        basis.push_back(jt.col(rep - 1));
    }
    return basis;
}

ScoreVector mean_limit_scores(const WeightedDigraph& g) {
    Eigen::MatrixXd jt = j_tilde(g).j_tilde;
    Eigen::VectorXd x = jt.rowwise().mean();
    return {std::move(x), ScoreMethod::KernelMean, 0.0};
}

ScoreVector daniels_tree_scores(const WeightedDigraph& g) {
    if (!is_strongly_connected(g))
        throw Error(ErrorCode::NotStronglyConnected, "tree scores need a strong digraph");
    // On a strong digraph all columns of J~ equal t / sum(t).
    Eigen::MatrixXd jt = j_tilde(g).j_tilde;
    return {jt.col(0), ScoreMethod::DanielsTree, 0.0};
}

ScoreVector borda_scores(const WeightedDigraph& g, double tau) {
    const int n = g.order();
    std::vector<ArcInput> sym;
    for (const Arc& a : g.arcs()) {
        sym.emplace_back(a.tail + 1, a.head + 1, a.weight);
        sym.emplace_back(a.head + 1, a.tail + 1, a.weight);
    }
    WeightedDigraph undirected = WeightedDigraph::build(n, sym);
    Eigen::MatrixXd jp = j_of_tau(forest_expansion(undirected), tau).j_matrix;

    Eigen::VectorXd strength = Eigen::VectorXd::Zero(n);
    for (const Arc& a : g.arcs()) {
        strength[a.tail] += a.weight;
        strength[a.head] -= a.weight;
    }
    return {jp * strength, ScoreMethod::Borda, tau};
}

RankingReport rank(const ScoreVector& scores) {
    const int n = static_cast<int>(scores.values.size());
    const double tie_tol = 1e-9;
    RankingReport report;
    report.ordering.resize(n);
    std::iota(report.ordering.begin(), report.ordering.end(), 1);
    std::sort(report.ordering.begin(), report.ordering.end(), [&](int a, int b) {
        double sa = scores.values[a - 1], sb = scores.values[b - 1];
        if (std::abs(sa - sb) > tie_tol) return sa > sb;
        return a < b;
    });
    std::vector<int> group{report.ordering[0]};
    for (int pos = 1; pos <= n; ++pos) {
        bool tied = pos < n &&
                    std::abs(scores.values[report.ordering[pos] - 1] -
                             scores.values[group.back() - 1]) <= tie_tol;
        if (tied) {
            group.push_back(report.ordering[pos]);
        } else {
            if (group.size() > 1) report.tie_groups.push_back(group);
            if (pos < n) group = {report.ordering[pos]};
        }
    }
    return report;
}

}  // namespace forests
