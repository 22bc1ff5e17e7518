// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_RANKING_HPP_
#define FORESTS_RANKING_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "forests/digraph.hpp"

namespace forests {

enum class ScoreMethod { KernelMean, DanielsTree, Borda };

const char* score_method_name(ScoreMethod method);

struct ScoreVector {
    Eigen::VectorXd values;
    ScoreMethod method;
    double tau = 0.0;  // Borda only
};

struct RankingReport {
    std::vector<int> ordering;             // 1-based, descending score
    std::vector<std::vector<int>> tie_groups;  // groups of >= 2 tied vertices
};

/// Columns of J~ at the smallest-index representative of each source knot:
/// an orthogonal basis of the solution space of Lx = 0.
std::vector<Eigen::VectorXd> kernel_basis(const WeightedDigraph& g);

/// Row averages of J~; sums to 1, zero outside the source knots.
ScoreVector mean_limit_scores(const WeightedDigraph& g);

/// Spanning diverging-tree weights, valid on strong digraphs only.
ScoreVector daniels_tree_scores(const WeightedDigraph& g);

/// Generalized Borda: J'(tau) of the symmetrized digraph applied to the
/// out-strength minus in-strength vector of the original digraph.
ScoreVector borda_scores(const WeightedDigraph& g, double tau);

RankingReport rank(const ScoreVector& scores);

}  // namespace forests

#endif  // FORESTS_RANKING_HPP_
