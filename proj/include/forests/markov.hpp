// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_MARKOV_HPP_
#define FORESTS_MARKOV_HPP_

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "forests/digraph.hpp"
#include "forests/oracle.hpp"
#include "forests/ranking.hpp"

namespace forests {

/// Row-stochastic chain inversely corresponding to a digraph:
/// P = I - alpha L^T, so transitions run against the arcs.
struct MarkovChain {
    Eigen::MatrixXd p;
    double alpha = 0.0;
};

struct CesaroResult {
    Eigen::MatrixXd pi;
    int iterations = 0;    // matrix multiplications performed
    double residual = 0.0;  // ||pi P - pi||_max
    bool converged = true;
};

/// Default alpha is 1/(2 max_i l_ii), keeping every diagonal entry >= 1/2.
MarkovChain inverse_chain(const WeightedDigraph& g,
                          std::optional<double> alpha = std::nullopt);

/// Cesaro limit of averaged powers, accelerated through powers of the lazy
/// chain (I+P)/2; the result always satisfies the residual contract
/// ||pi P - pi||_max <= tol when converged.
CesaroResult cesaro_limit(const MarkovChain& chain, int max_iters = 256, double tol = 1e-9);

/// ||Cesaro(inverse_chain(g, alpha)) - J~^T||_max.
double verify_theorem3(const WeightedDigraph& g, std::optional<double> alpha = std::nullopt,
                       int max_iters = 256, double tol = 1e-9);

/// Limiting state distribution from the uniform initial distribution.
ScoreVector uniform_start_limit(const WeightedDigraph& g,
                                std::optional<double> alpha = std::nullopt);

struct DisseminationEstimate {
    Eigen::MatrixXd j_hat;
    Eigen::MatrixXd std_error;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
};

/// Monte-Carlo estimate of J by sampling transmission plans uniformly from
/// the enumerated out-forests and conditioning on plan success. Weights
/// double as arc success probabilities and must lie in [0,1]. Deterministic
/// for a fixed seed.
DisseminationEstimate simulate_dissemination(const WeightedDigraph& g, std::int64_t trials,
                                             std::uint64_t seed,
                                             std::int64_t cap = kDefaultEnumerationCap);

}  // namespace forests

#endif  // FORESTS_MARKOV_HPP_
