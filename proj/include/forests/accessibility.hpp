// SPDX-License-Identifier: Apache-2.0
#ifndef FORESTS_ACCESSIBILITY_HPP_
#define FORESTS_ACCESSIBILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "forests/calculus.hpp"
#include "forests/digraph.hpp"

namespace forests {

enum class MeasureKind { Out, In, LimitingOut, LimitingIn, DenseOut };

const char* measure_kind_name(MeasureKind kind);

/// A vertex-to-vertex proximity matrix tagged with its generating measure.
/// p(i,j) is the accessibility of j from i (0-based storage).
struct AccessibilityMatrix {
    Eigen::MatrixXd p;
    MeasureKind kind;
    double param = 0.0;  // tau or alpha, where applicable
};

/// Which measure to (re)compute; used by the perturbation checkers.
struct MeasureSpec {
    MeasureKind kind;
    double param = 1.0;
};

AccessibilityMatrix compute_measure(const WeightedDigraph& g, const MeasureSpec& spec);

AccessibilityMatrix access_out(const WeightedDigraph& g, double tau);
AccessibilityMatrix access_in(const WeightedDigraph& g, double tau);

enum class Direction { Out, In };
AccessibilityMatrix access_limiting(const WeightedDigraph& g, Direction direction);

AccessibilityMatrix access_dense(const WeightedDigraph& g, double alpha);

// --- condition checkers ---------------------------------------------------

enum class VerdictKind { Pass, Fail };

struct Witness {
    std::vector<int> vertices;  // 1-based
    std::vector<double> values;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Pass;
    std::optional<Witness> witness;

    bool passed() const { return kind == VerdictKind::Pass; }
};

enum class Variant { A, B };

/// Reachability condition "p_ij = 0 <=> j unreachable from i".
/// Forward is the "=>" part (p_ij = 0 implies unreachable), Backward the
/// "<=" part (unreachable implies p_ij = 0).
enum class ReachabilityPart { Forward, Backward };

Verdict check_nonnegativity(const AccessibilityMatrix& P);
Verdict check_reachability(const AccessibilityMatrix& P, const WeightedDigraph& g,
                           ReachabilityPart part);
Verdict check_self_accessibility(const AccessibilityMatrix& P, Variant variant, bool strict);
Verdict check_triangle(const AccessibilityMatrix& P, Variant variant);
Verdict check_transit(const AccessibilityMatrix& P, const WeightedDigraph& g, Variant variant,
                      bool strict);

/// Weight perturbation of one (possibly absent) arc, 1-based endpoints.
struct Perturbation {
    int tail;
    int head;
    double delta;
};

/// Recomputes the measure on the perturbed digraph and tests the three
/// monotonicity items on the increments. Cutpoint preconditions of items
/// 2-3 are evaluated on the original digraph; item 3 follows the variant.
Verdict check_monotonicity(const MeasureSpec& measure, const WeightedDigraph& g,
                           const Perturbation& arc, Variant variant, bool strict);

Verdict check_convexity(const AccessibilityMatrix& P, const WeightedDigraph& g, Variant variant,
                        bool strict);

// --- audit ----------------------------------------------------------------

struct ConditionResult {
    std::string condition;
    char variant;  // 'A', 'B', or '-' for unpartitioned
    Verdict strict_verdict;
    Verdict nonstrict_verdict;
};

struct AuditReport {
    MeasureSpec measure;
    std::vector<ConditionResult> results;

    const ConditionResult* find(const std::string& condition, char variant) const;
};

std::vector<Perturbation> default_perturbation_plan(const WeightedDigraph& g);

AuditReport audit(const MeasureSpec& measure, const WeightedDigraph& g,
                  const std::vector<Perturbation>& plan);

/// Theorem-4 profile: all unpartitioned conditions pass and all strict
/// conditions of the given variant pass.
bool theorem4_profile_holds(const AuditReport& report, Variant variant);

/// Theorem-5 profile for a limiting measure: strict variant conditions fail
/// but their nonstrict forms pass, triangle passes as stated, and the
/// forward ("=>") reachability part fails.
bool theorem5_profile_holds(const AuditReport& report, Variant variant);

}  // namespace forests

#endif  // FORESTS_ACCESSIBILITY_HPP_
