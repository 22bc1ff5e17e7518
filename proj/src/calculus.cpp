// SPDX-License-Identifier: Apache-2.0
#include "forests/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "forests/components.hpp"

namespace forests {

ForestExpansion forest_expansion(const Eigen::MatrixXd& L, int d_prime) {
    const int n = static_cast<int>(L.rows());
    const int kmax = n - d_prime;

    ForestExpansion exp;
    exp.d_prime = d_prime;
    exp.sigma.assign(n + 1, 0.0);
    exp.sigma[0] = 1.0;
    exp.q_matrices.push_back(Eigen::MatrixXd::Identity(n, n));

    double sigma_max = 1.0;
    for (int k = 1; k <= kmax + 1; ++k) {
        Eigen::MatrixXd lq = L * exp.q_matrices.back();
        double sk = lq.trace() / k;
        if (sk < -1e-9 * sigma_max)
            throw Error(ErrorCode::NumericalBreakdown,
                        "sigma_" + std::to_string(k) + " = " + std::to_string(sk));
        sk = std::max(sk, 0.0);
        Eigen::MatrixXd qk = sk * Eigen::MatrixXd::Identity(n, n) - lq;
        if (k <= kmax) {
            exp.sigma[k] = sk;
            exp.q_matrices.push_back(std::move(qk));
            sigma_max = std::max(sigma_max, sk);
        } else {
            // Conditioning sentinel: the first truncated matrix must vanish.
            double limit = 1e-9 * std::max(exp.sigma[kmax], 1.0);
            if (qk.cwiseAbs().maxCoeff() > limit || sk > limit)
                throw Error(ErrorCode::NumericalBreakdown,
                            "Q_" + std::to_string(k) + " fails to vanish beyond n-d'");
        }
    }
    return exp;
}

ForestExpansion forest_expansion(const WeightedDigraph& g) {
    return forest_expansion(laplacian(g), strong_components(g).d_prime);
}

double sigma_of_tau(const ForestExpansion& exp, double tau) {
    double total = 0.0, power = 1.0;
    for (int k = 0; k <= exp.max_arcs(); ++k) {
        total += exp.sigma[k] * power;
        power *= tau;
    }
    return total;
}

Eigen::MatrixXd q_of_tau(const ForestExpansion& exp, double tau) {
    const int n = exp.order();
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
    double power = 1.0;
    for (int k = 0; k <= exp.max_arcs(); ++k) {
        total += exp.q_matrices[k] * power;
        power *= tau;
    }
    return total;
}

ParametricProximity j_of_tau(const ForestExpansion& exp, double tau) {
    ParametricProximity p;
    p.tau = tau;
    p.sigma_tau = sigma_of_tau(exp, tau);
    p.j_matrix = q_of_tau(exp, tau) / p.sigma_tau;
    return p;
}

Eigen::MatrixXd j_k(const ForestExpansion& exp, int k) {
    if (k < 0 || k > exp.max_arcs())
        throw Error(ErrorCode::IndexBeyondMaxForest,
                    "k = " + std::to_string(k) + ", max " + std::to_string(exp.max_arcs()));
    if (!(exp.sigma[k] > 0.0))
        throw Error(ErrorCode::ZeroSigma, "sigma_" + std::to_string(k) + " = 0");
    return exp.q_matrices[k] / exp.sigma[k];
}

LimitingMatrix j_tilde(const ForestExpansion& exp) {
    return {j_k(exp, exp.max_arcs())};
}

LimitingMatrix j_tilde(const WeightedDigraph& g) {
    return j_tilde(forest_expansion(g));
}

Eigen::MatrixXd dense_forest_measure(const LimitingMatrix& jt, const ForestExpansion& exp,
                                     double alpha) {
    const int n = exp.order();
    const int kmax = exp.max_arcs();
    if (kmax == 0)
        throw Error(ErrorCode::UndefinedBound, "n - d' = 0, alpha bound undefined");
    double bound = exp.sigma[kmax] / exp.sigma[kmax - 1];  // sigma_(d')/sigma_(d'+1)
    if (!(alpha > 0.0) || !(alpha < bound))
        throw Error(ErrorCode::AlphaOutOfBounds,
                    "alpha " + std::to_string(alpha) + " not in (0, " + std::to_string(bound) + ")");

    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd closed = eye - (alpha / (1.0 + alpha)) * jt.j_tilde;
    Eigen::MatrixXd direct = (eye + alpha * jt.j_tilde).inverse();
    double dev = (closed - direct).cwiseAbs().maxCoeff();
    if (dev > 1e-12 * std::max(1.0, closed.cwiseAbs().maxCoeff()))
        throw Error(ErrorCode::NumericalBreakdown,
                    "dense-forest routes disagree by " + std::to_string(dev));
    return closed;
}

int numerical_rank(Eigen::MatrixXd m, double pivot_threshold) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int rank = 0;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = 0, pc = 0;
        double pivot = 0.0;
        for (int r = rank; r < rows; ++r)
            for (int c = rank; c < cols; ++c)
                if (std::abs(m(r, c)) > pivot) {
                    pivot = std::abs(m(r, c));
                    pr = r;
                    pc = c;
                }
        if (pivot <= pivot_threshold) break;
        m.row(rank).swap(m.row(pr));
        m.col(rank).swap(m.col(pc));
        for (int r = rank + 1; r < rows; ++r) {
            double f = m(r, rank) / m(rank, rank);
            m.row(r) -= f * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

}  // namespace forests
