// SPDX-License-Identifier: Apache-2.0
#include "forests/accessibility.hpp"

#include <algorithm>
#include <cmath>

#include "forests/components.hpp"

namespace forests {

const char* measure_kind_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Out: return "out";
        case MeasureKind::In: return "in";
        case MeasureKind::LimitingOut: return "limiting_out";
        case MeasureKind::LimitingIn: return "limiting_in";
        case MeasureKind::DenseOut: return "dense_out";
    }
    return "?";
}

AccessibilityMatrix access_out(const WeightedDigraph& g, double tau) {
    return {j_of_tau(forest_expansion(g), tau).j_matrix, MeasureKind::Out, tau};
}

AccessibilityMatrix access_in(const WeightedDigraph& g, double tau) {
    // Dual of the out-measure on the reversed digraph.
    Eigen::MatrixXd dual = access_out(reverse(g), tau).p;
    return {dual.transpose(), MeasureKind::In, tau};
}

AccessibilityMatrix access_limiting(const WeightedDigraph& g, Direction direction) {
    if (direction == Direction::Out)
        return {j_tilde(g).j_tilde, MeasureKind::LimitingOut, 0.0};
    Eigen::MatrixXd dual = j_tilde(reverse(g)).j_tilde;
    return {dual.transpose(), MeasureKind::LimitingIn, 0.0};
}

AccessibilityMatrix access_dense(const WeightedDigraph& g, double alpha) {
    ForestExpansion exp = forest_expansion(g);
    return {dense_forest_measure(j_tilde(exp), exp, alpha), MeasureKind::DenseOut, alpha};
}

AccessibilityMatrix compute_measure(const WeightedDigraph& g, const MeasureSpec& spec) {
    switch (spec.kind) {
        case MeasureKind::Out: return access_out(g, spec.param);
        case MeasureKind::In: return access_in(g, spec.param);
        case MeasureKind::LimitingOut: return access_limiting(g, Direction::Out);
        case MeasureKind::LimitingIn: return access_limiting(g, Direction::In);
        case MeasureKind::DenseOut: return access_dense(g, spec.param);
    }
    throw std::logic_error("unknown measure kind");
}

namespace {

double margin_for(const Eigen::MatrixXd& p) {
    return 1e-9 * std::max(1.0, p.cwiseAbs().maxCoeff());
}

Verdict fail(std::vector<int> vertices, std::vector<double> values) {
    return {VerdictKind::Fail, Witness{std::move(vertices), std::move(values)}};
}

// lhs > rhs, with the strictness margin convention.
bool gt(double lhs, double rhs, double margin, bool strict) {
    return strict ? lhs - rhs > margin : lhs - rhs >= -margin;
}

}  // namespace

Verdict check_nonnegativity(const AccessibilityMatrix& P) {
    const int n = static_cast<int>(P.p.rows());
    double margin = margin_for(P.p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (P.p(i, j) < -margin) return fail({i + 1, j + 1}, {P.p(i, j)});
    return {};
}

Verdict check_reachability(const AccessibilityMatrix& P, const WeightedDigraph& g,
                           ReachabilityPart part) {
    const int n = g.order();
    const double zero_tol = 1e-12;
    for (int i = 0; i < n; ++i) {
        auto mask = reachable_mask(g, i);
        for (int j = 0; j < n; ++j) {
            bool zero = std::abs(P.p(i, j)) <= zero_tol;
            if (part == ReachabilityPart::Forward && zero && mask[j])
                return fail({i + 1, j + 1}, {P.p(i, j)});
            if (part == ReachabilityPart::Backward && !mask[j] && !zero)
                return fail({i + 1, j + 1}, {P.p(i, j)});
        }
    }
    return {};
}

Verdict check_self_accessibility(const AccessibilityMatrix& P, Variant variant, bool strict) {
    const int n = static_cast<int>(P.p.rows());
    double margin = margin_for(P.p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double other = variant == Variant::A ? P.p(i, j) : P.p(j, i);
            if (!gt(P.p(i, i), other, margin, strict))
                return fail({i + 1, j + 1}, {P.p(i, i), other});
        }
    return {};
}

Verdict check_triangle(const AccessibilityMatrix& P, Variant variant) {
    const int n = static_cast<int>(P.p.rows());
    double margin = margin_for(P.p);
    // A: p_ik - p_ii <= p_kk - p_kt over all ordered triples (i,k,t), i.e.
    // p_ik + p_kt <= p_ii + p_kk; B is the transpose-dual,
    // p_ki - p_ii <= p_kk - p_tk.
    const Eigen::MatrixXd m =
        variant == Variant::A ? P.p : Eigen::MatrixXd(P.p.transpose());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int t = 0; t < n; ++t) {
                double lhs = m(i, k) - m(i, i);
                double rhs = m(k, k) - m(k, t);
                if (lhs > rhs + margin)
                    return fail({i + 1, k + 1, t + 1}, {lhs, rhs});
            }
    return {};
}

Verdict check_transit(const AccessibilityMatrix& P, const WeightedDigraph& g, Variant variant,
                      bool strict) {
    const int n = g.order();
    double margin = margin_for(P.p);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= n; ++t) {
                if (i == k || k == t || i == t) continue;
                if (!is_cutpoint(g, k, i, t)) continue;
                double lhs = variant == Variant::A ? P.p(i - 1, k - 1) : P.p(k - 1, t - 1);
                double rhs = P.p(i - 1, t - 1);
                if (!gt(lhs, rhs, margin, strict)) return fail({i, k, t}, {lhs, rhs});
            }
    return {};
}

Verdict check_monotonicity(const MeasureSpec& measure, const WeightedDigraph& g,
                           const Perturbation& arc, Variant variant, bool strict) {
    if (arc.tail == arc.head)
        throw Error(ErrorCode::LoopArc, "perturbation of a loop arc");
    if (!(arc.delta > 0.0))
        throw Error(ErrorCode::NonpositiveWeight, "perturbation delta must be positive");

    std::vector<ArcInput> arcs;
    for (const Arc& a : g.arcs()) arcs.emplace_back(a.tail + 1, a.head + 1, a.weight);
    arcs.emplace_back(arc.tail, arc.head, arc.delta);
    WeightedDigraph perturbed = WeightedDigraph::build(g.order(), arcs);

    Eigen::MatrixXd before = compute_measure(g, measure).p;
    Eigen::MatrixXd after = compute_measure(perturbed, measure).p;
    Eigen::MatrixXd delta = after - before;
    double margin = 1e-9 * std::max({1.0, before.cwiseAbs().maxCoeff(),
                                     after.cwiseAbs().maxCoeff()});

    const int k = arc.tail, t = arc.head;
    // Item 1.
    if (!gt(delta(k - 1, t - 1), 0.0, margin, strict))
        return fail({k, t}, {delta(k - 1, t - 1)});
    // Items 2 and 3; cutpoint preconditions on the original digraph.
    for (int i = 1; i <= g.order(); ++i) {
        if (i == k || i == t) continue;
        if (is_cutpoint(g, t, k, i)) {
            if (!gt(delta(k - 1, i - 1), delta(t - 1, i - 1), margin, strict))
                return fail({k, t, i}, {delta(k - 1, i - 1), delta(t - 1, i - 1)});
            if (variant == Variant::A &&
                !gt(delta(k - 1, t - 1), delta(k - 1, i - 1), margin, strict))
                return fail({k, t, i}, {delta(k - 1, t - 1), delta(k - 1, i - 1)});
        }
        if (is_cutpoint(g, k, i, t)) {
            if (!gt(delta(i - 1, t - 1), delta(i - 1, k - 1), margin, strict))
                return fail({i, t}, {delta(i - 1, t - 1), delta(i - 1, k - 1)});
            if (variant == Variant::B &&
                !gt(delta(k - 1, t - 1), delta(i - 1, t - 1), margin, strict))
                return fail({k, t, i}, {delta(k - 1, t - 1), delta(i - 1, t - 1)});
        }
    }
    return {};
}

namespace {

// Variant-A convexity on (m, graph): for pairs with m_ki > m_ii, look for a
// simple k->i path along which m_kj - m_ij decreases at every step.
Verdict convexity_on(const Eigen::MatrixXd& m, const WeightedDigraph& g, bool strict) {
    const int n = g.order();
    double margin = margin_for(m);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (i == k || m(k, i) - m(i, i) <= margin) continue;
            std::vector<char> on_path(n, 0);
            bool found = false;
            auto dfs = [&](auto&& self, int v, double prev) -> void {
                if (found) return;
                if (v == i) {
                    found = true;
                    return;
                }
                on_path[v] = 1;
                for (int a : g.out_arcs(v)) {
                    int u = g.arcs()[a].head;
                    if (on_path[u]) continue;
                    double d = m(k, u) - m(i, u);
                    bool ok = strict ? d < prev - margin : d <= prev + margin;
                    if (ok) self(self, u, d);
                    if (found) break;
                }
                on_path[v] = 0;
            };
            dfs(dfs, k, m(k, k) - m(i, k));
            if (!found) return fail({k + 1, i + 1}, {m(k, i), m(i, i)});
        }
    return {};
}

}  // namespace

Verdict check_convexity(const AccessibilityMatrix& P, const WeightedDigraph& g, Variant variant,
                        bool strict) {
    if (g.order() > 12)
        throw Error(ErrorCode::GraphTooLargeForConvexity,
                    "n = " + std::to_string(g.order()) + " > 12");
    if (variant == Variant::A) return convexity_on(P.p, g, strict);
    return convexity_on(P.p.transpose(), reverse(g), strict);
}

// --- audit ----------------------------------------------------------------

const ConditionResult* AuditReport::find(const std::string& condition, char variant) const {
    for (const auto& r : results)
        if (r.condition == condition && r.variant == variant) return &r;
    return nullptr;
}

std::vector<Perturbation> default_perturbation_plan(const WeightedDigraph& g) {
    std::vector<Perturbation> plan;
    for (const Arc& a : g.arcs()) plan.push_back({a.tail + 1, a.head + 1, a.weight / 2.0});
    SourceKnotInfo info = strong_components(g);
    for (size_t s = 0; s < info.source_knots.size(); ++s)
        for (size_t t = s + 1; t < info.source_knots.size(); ++t) {
            bool added = false;
            for (int u : info.source_knots[s]) {
                for (int v : info.source_knots[t])
                    if (g.weight(u - 1, v - 1) == 0.0) {
                        plan.push_back({u, v, 1.0});
                        added = true;
                        break;
                    }
                if (added) break;
            }
        }
    return plan;
}

AuditReport audit(const MeasureSpec& measure, const WeightedDigraph& g,
                  const std::vector<Perturbation>& plan) {
    AccessibilityMatrix P = compute_measure(g, measure);
    AuditReport report;
    report.measure = measure;

    auto both = [](Verdict v) { return std::pair(v, v); };
    auto add = [&](const std::string& name, char variant, std::pair<Verdict, Verdict> sv) {
        report.results.push_back({name, variant, std::move(sv.first), std::move(sv.second)});
    };

    add("nonnegativity", '-', both(check_nonnegativity(P)));
    add("reachability_forward", '-',
        both(check_reachability(P, g, ReachabilityPart::Forward)));
    add("reachability_backward", '-',
        both(check_reachability(P, g, ReachabilityPart::Backward)));

    for (Variant v : {Variant::A, Variant::B}) {
        char tag = v == Variant::A ? 'A' : 'B';
        add("self_accessibility", tag,
            {check_self_accessibility(P, v, true), check_self_accessibility(P, v, false)});
        add("triangle", tag, both(check_triangle(P, v)));
        add("transit", tag, {check_transit(P, g, v, true), check_transit(P, g, v, false)});

        Verdict mono_strict, mono_nonstrict;
        for (const Perturbation& pert : plan) {
            if (mono_strict.passed()) {
                Verdict r = check_monotonicity(measure, g, pert, v, true);
                if (!r.passed()) mono_strict = r;
            }
            if (mono_nonstrict.passed()) {
                Verdict r = check_monotonicity(measure, g, pert, v, false);
                if (!r.passed()) mono_nonstrict = r;
            }
        }
        add("monotonicity", tag, {mono_strict, mono_nonstrict});

        add("convexity", tag,
            {check_convexity(P, g, v, true), check_convexity(P, g, v, false)});
    }
    return report;
}

bool theorem4_profile_holds(const AuditReport& report, Variant variant) {
    char tag = variant == Variant::A ? 'A' : 'B';
    for (const char* name : {"nonnegativity", "reachability_forward", "reachability_backward"}) {
        const ConditionResult* r = report.find(name, '-');
        if (!r || !r->strict_verdict.passed()) return false;
    }
    for (const char* name : {"self_accessibility", "triangle", "transit", "monotonicity",
                             "convexity"}) {
        const ConditionResult* r = report.find(name, tag);
        if (!r || !r->strict_verdict.passed()) return false;
    }
    return true;
}

bool theorem5_profile_holds(const AuditReport& report, Variant variant) {
    char tag = variant == Variant::A ? 'A' : 'B';
    const ConditionResult* nn = report.find("nonnegativity", '-');
    const ConditionResult* fwd = report.find("reachability_forward", '-');
    const ConditionResult* bwd = report.find("reachability_backward", '-');
    if (!nn || !fwd || !bwd) return false;
    if (!nn->strict_verdict.passed()) return false;
    if (fwd->strict_verdict.passed()) return false;  // "=>" part must be violated
    if (!bwd->strict_verdict.passed()) return false;

    const ConditionResult* tri = report.find("triangle", tag);
    if (!tri || !tri->strict_verdict.passed()) return false;

    for (const char* name : {"self_accessibility", "transit", "monotonicity", "convexity"}) {
        const ConditionResult* r = report.find(name, tag);
        if (!r) return false;
        if (r->strict_verdict.passed()) return false;
        if (!r->nonstrict_verdict.passed()) return false;
    }
    return true;
}

}  // namespace forests
