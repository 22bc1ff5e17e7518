// SPDX-License-Identifier: Apache-2.0
#include "forests/markov.hpp"

#include <cmath>
#include <random>

#include "forests/calculus.hpp"

namespace forests {

MarkovChain inverse_chain(const WeightedDigraph& g, std::optional<double> alpha) {
    const int n = g.order();
    Eigen::MatrixXd L = laplacian(g);
    double max_diag = L.diagonal().maxCoeff();

    double a;
    if (alpha) {
        a = *alpha;
        if (!(a > 0.0))
            throw Error(ErrorCode::AlphaOutOfBounds, "alpha must be positive");
        if (max_diag > 0.0 && a > 1.0 / max_diag + 1e-15)
            throw Error(ErrorCode::AlphaTooLarge,
                        "alpha " + std::to_string(a) + " exceeds 1/max l_ii = " +
                            std::to_string(1.0 / max_diag));
    } else {
        a = max_diag > 0.0 ? 1.0 / (2.0 * max_diag) : 1.0;
    }
    return {Eigen::MatrixXd::Identity(n, n) - a * L.transpose(), a};
}

CesaroResult cesaro_limit(const MarkovChain& chain, int max_iters, double tol) {
    const int n = static_cast<int>(chain.p.rows());
    // Powers of the lazy chain (I+P)/2 converge to the eigenprojection of P
    // at 1, which is the Cesaro limit; repeated squaring reaches huge powers
    // quickly and the residual against P certifies the answer.
    Eigen::MatrixXd lazy = 0.5 * (Eigen::MatrixXd::Identity(n, n) + chain.p);
    CesaroResult result;
    result.pi = lazy;
    for (int it = 0; it < max_iters; ++it) {
        result.residual = (result.pi * chain.p - result.pi).cwiseAbs().maxCoeff();
        if (result.residual <= tol) {
            result.converged = true;
            return result;
        }
        result.pi = result.pi * result.pi;
        ++result.iterations;
    }
    result.residual = (result.pi * chain.p - result.pi).cwiseAbs().maxCoeff();
    result.converged = result.residual <= tol;
    return result;
}

double verify_theorem3(const WeightedDigraph& g, std::optional<double> alpha, int max_iters,
                       double tol) {
    CesaroResult cesaro = cesaro_limit(inverse_chain(g, alpha), max_iters, tol);
    Eigen::MatrixXd jt = j_tilde(g).j_tilde;
    return (cesaro.pi - jt.transpose()).cwiseAbs().maxCoeff();
}

ScoreVector uniform_start_limit(const WeightedDigraph& g, std::optional<double> alpha) {
    const int n = g.order();
    CesaroResult cesaro = cesaro_limit(inverse_chain(g, alpha));
    Eigen::VectorXd dist = cesaro.pi.colwise().mean();
    (void)n;
    return {std::move(dist), ScoreMethod::KernelMean, 0.0};
}

DisseminationEstimate simulate_dissemination(const WeightedDigraph& g, std::int64_t trials,
                                             std::uint64_t seed, std::int64_t cap) {
    for (const Arc& a : g.arcs())
        if (a.weight > 1.0)
            throw Error(ErrorCode::WeightAboveOne,
                        "arc (" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) +
                            ") has weight " + std::to_string(a.weight));

    const int n = g.order();
    std::vector<SpanningForest> forests = enumerate_out_forests(g, cap);
    const std::uint64_t count = forests.size();

    std::mt19937_64 rng(seed);
    // Hand-rolled draws: std distributions are implementation-defined and
    // the output must be byte-reproducible across platforms.
    auto next_unit = [&]() { return (rng() >> 11) * 0x1.0p-53; };

    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(n, n);
    std::int64_t successes = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const SpanningForest& plan = forests[rng() % count];
        bool success = true;
        for (const Arc& a : plan.arcs)
            if (next_unit() >= a.weight) success = false;  // still draw every arc
        if (!success) continue;
        ++successes;
        for (int v = 0; v < n; ++v) counts(plan.tree_of[v] - 1, v) += 1.0;
    }

    DisseminationEstimate est;
    est.trials = trials;
    est.successes = successes;
    est.j_hat = Eigen::MatrixXd::Zero(n, n);
    est.std_error = Eigen::MatrixXd::Zero(n, n);
    if (successes > 0) {
        est.j_hat = counts / static_cast<double>(successes);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double p = est.j_hat(i, j);
                est.std_error(i, j) = std::sqrt(p * (1.0 - p) / successes);
            }
    }
    return est;
}

}  // namespace forests
