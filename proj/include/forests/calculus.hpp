// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_CALCULUS_HPP_
#define FORESTS_CALCULUS_HPP_

#include <vector>

#include <Eigen/Dense>

#include "forests/digraph.hpp"

namespace forests {

/// Forest coefficients sigma_0..sigma_n and matrices Q_0..Q_{n-d'}.
/// sigma[k] is the total weight of out-forests with k arcs; Q_k(i,j) is the
/// weight of k-arc out-forests in which j lies in the tree rooted at i.
struct ForestExpansion {
    std::vector<double> sigma;  // length n+1, zero beyond n-d'
    std::vector<Eigen::MatrixXd> q_matrices;
    int d_prime = 0;

    int order() const { return static_cast<int>(sigma.size()) - 1; }
    int max_arcs() const { return order() - d_prime; }

    /// Tree-count indexing: sigma_(k) = sigma_{n-k}, k = 1..n.
    double sigma_tree_indexed(int k) const { return sigma.at(order() - k); }
};

struct ParametricProximity {
    double tau = 0.0;
    Eigen::MatrixXd j_matrix;  // column stochastic
    double sigma_tau = 0.0;
};

struct LimitingMatrix {
    Eigen::MatrixXd j_tilde;  // idempotent, column stochastic
};

/// Coefficients via the recurrence sigma_k = tr(L Q_{k-1})/k,
/// Q_k = sigma_k I - L Q_{k-1}.
ForestExpansion forest_expansion(const Eigen::MatrixXd& L, int d_prime);
ForestExpansion forest_expansion(const WeightedDigraph& g);

/// sigma(tau) = sum sigma_k tau^k = det(I + tau L).
double sigma_of_tau(const ForestExpansion& exp, double tau);

/// Q(tau) = sum Q_k tau^k = adj(I + tau L).
Eigen::MatrixXd q_of_tau(const ForestExpansion& exp, double tau);

/// J(tau) = Q(tau)/sigma(tau) = (I + tau L)^{-1}.
ParametricProximity j_of_tau(const ForestExpansion& exp, double tau);

/// J_k = Q_k / sigma_k, column stochastic.
Eigen::MatrixXd j_k(const ForestExpansion& exp, int k);

/// J~ = J_{n-d'}, the stochastic matrix of maximum out-forests.
LimitingMatrix j_tilde(const ForestExpansion& exp);
LimitingMatrix j_tilde(const WeightedDigraph& g);

/// (I + alpha J~)^{-1} for 0 < alpha < sigma_(d')/sigma_(d'+1); equals
/// I - (alpha/(1+alpha)) J~ by idempotence, and both routes are compared.
Eigen::MatrixXd dense_forest_measure(const LimitingMatrix& jt, const ForestExpansion& exp,
                                     double alpha);

/// Rank by full-pivot elimination with an absolute pivot threshold.
int numerical_rank(Eigen::MatrixXd m, double pivot_threshold);

}  // namespace forests

#endif  // FORESTS_CALCULUS_HPP_
