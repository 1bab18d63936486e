#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gptd/rational.hpp"

namespace gptd {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    std::vector<Rat> coeffs;  // one per variable
    Relation relation = Relation::Equal;
    Rat rhs;
};

struct VariableBounds {
    std::optional<Rat> lower;
    std::optional<Rat> upper;
};

/// A linear program in minimization form. An empty objective means pure
/// feasibility (all-zero objective). Bounds default to free variables.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rat> objective;                 // empty, or one coefficient per variable
    std::vector<LinearConstraint> constraints;
    std::vector<VariableBounds> bounds;         // empty, or one entry per variable

    void add_constraint(std::vector<Rat> coeffs, Relation relation, Rat rhs) {
        constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
    }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::vector<Rat> witness;  // filled when status == Optimal; satisfies every constraint exactly
    Rat objective_value;       // meaningful when status == Optimal; equals objective at witness
    long pivot_count = 0;
};

/// Thrown if a solve exceeds the pivot ceiling. Bland's rule makes this
/// unreachable for well-formed input; the ceiling is a tripwire, not a
/// tuning knob. GPTD_LP_PIVOT_LIMIT overrides it for debugging.
class PivotLimitExceeded : public std::runtime_error {
  public:
    explicit PivotLimitExceeded(long limit)
        : std::runtime_error("simplex exceeded pivot ceiling of " + std::to_string(limit)) {}
};

/// Exact rational two-phase simplex with Bland's anti-cycling rule.
/// Deterministic for identical input; returns exact optima and exact
/// infeasibility/unboundedness verdicts. Never fails numerically.
LPResult solve(const LinearProgram& lp);

/// Phase one only: an exact feasible assignment, or nullopt.
std::optional<std::vector<Rat>> feasible_point(const LinearProgram& lp);

/// Exact re-substitution of an assignment into every constraint and bound.
bool satisfies(const LinearProgram& lp, const std::vector<Rat>& assignment);

/// Exact objective value at an assignment.
Rat objective_at(const LinearProgram& lp, const std::vector<Rat>& assignment);

}  // namespace gptd
