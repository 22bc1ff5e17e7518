// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_TESTS_HELPERS_HPP_
#define FORESTS_TESTS_HELPERS_HPP_

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "forests/digraph.hpp"

namespace forests::testing {

inline WeightedDigraph path3() {
    return WeightedDigraph::build(3, {{1, 2, 1.0}, {2, 3, 1.0}});
}

inline WeightedDigraph fork3() {
    return WeightedDigraph::build(3, {{1, 3, 1.0}, {2, 3, 1.0}});
}

inline WeightedDigraph two_cycle(double w12 = 2.0, double w21 = 1.0) {
    return WeightedDigraph::build(2, {{1, 2, w12}, {2, 1, w21}});
}

inline WeightedDigraph triangle() {
    return WeightedDigraph::build(3, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 1, 1.0}});
}

inline WeightedDigraph arcless(int n) { return WeightedDigraph::build(n, {}); }

inline WeightedDigraph single_arc(double w = 1.0) {
    return WeightedDigraph::build(2, {{1, 2, w}});
}

/// Random digraph with integer weights in 1..max_weight; every ordered pair
/// gets an arc with probability arc_prob.
inline WeightedDigraph random_digraph(std::mt19937& rng, int n, double arc_prob = 0.4,
                                      int max_weight = 3) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::vector<ArcInput> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && coin(rng) < arc_prob) arcs.emplace_back(i, j, weight(rng));
    return WeightedDigraph::build(n, arcs);
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace forests::testing

#endif  // FORESTS_TESTS_HELPERS_HPP_
