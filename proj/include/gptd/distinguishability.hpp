#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gptd/convex.hpp"
#include "gptd/indep_system.hpp"
#include "gptd/rational.hpp"

namespace gptd {

/// The linear extension of an affine measurement: an m x n rational matrix
/// whose columns each sum to exactly 1, so it maps the sum-1 hyperplane of
/// R^n into that of R^m. Validity against a concrete state space (all
/// outcome probabilities non-negative) is a separate, relative check.
class Measurement {
  public:
    explicit Measurement(std::vector<std::vector<Rat>> rows);

    int outcomes() const { return static_cast<int>(rows_.size()); }
    int dimension() const { return static_cast<int>(rows_.front().size()); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const Rat& at(int i, int k) const {
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }

    /// Outcome distribution for a state: the image of p under the matrix.
    RPoint apply(const RPoint& p) const;

    /// Checks that every generator maps into the simplex, exactly. By
    /// convexity this extends to the whole space, so generators suffice.
    bool valid_for(const StateSpace& space) const;

  private:
    std::vector<std::vector<Rat>> rows_;
};

struct ErrorReport {
    Rat value;  // minimum total misidentification probability, sum convention
    Measurement optimal_measurement;

    /// The same optimum under the average convention, for display.
    Rat average() const { return value / Rat(optimal_measurement.outcomes()); }
};

struct JpdResult {
    bool jpd = false;
    std::optional<Measurement> witness;  // engaged when jpd
};

/// Decides whether the listed generators are jointly perfectly
/// distinguishable: is there a measurement sending the k-th listed state
/// to the k-th vertex of the outcome simplex while staying valid on all of
/// the space? Positions are 0-based generator indices, pairwise distinct.
/// Pinning the identity outcome assignment loses no generality because
/// outcome permutations are themselves affine.
JpdResult is_jpd(const StateSpace& space, const std::vector<int>& states);

/// Two-state special case of is_jpd.
bool is_antipodal(const StateSpace& space, int a, int b);

/// Minimum symmetric error probability for the listed states: minimizes
/// the sum over k of (1 - probability of outcome k in state k) over all
/// valid measurements. The feasible region is nonempty and bounded, so the
/// minimum is attained; the result carries an optimal measurement.
ErrorReport symmetric_error(const StateSpace& space, const std::vector<int>& states);

struct SubsetVerdict {
    bool jpd = false;
    long lp_calls = 0;  // 0 when the verdict came from pruning or is trivial
};

struct JpdFamilyStats {
    std::map<IndexSubset, SubsetVerdict> verdicts;
    long total_lp_calls = 0;
};

/// The family of all index subsets H of the listed states for which the
/// selected states are jointly perfectly distinguishable. Enumerates by
/// increasing cardinality; once a subset fails, every superset is marked
/// failed without further solver calls, which is sound because joint
/// distinguishability is inherited by subsets.
IndependenceSystem jpd_family(const StateSpace& space, const std::vector<int>& states,
                              JpdFamilyStats* stats = nullptr);

}  // namespace gptd
