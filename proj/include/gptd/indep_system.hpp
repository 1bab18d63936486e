#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gptd/index_subset.hpp"

namespace gptd {

/// Raised when a claimed member family is not downward-closed. Carries a
/// witnessing pair: a present superset and one of its absent subsets.
class NotDownwardClosedError : public std::runtime_error {
  public:
    NotDownwardClosedError(IndexSubset present, IndexSubset absent)
        : std::runtime_error("family is not downward-closed: " + present.str() +
                             " is a member but " + absent.str() + " is not"),
          present_superset(present),
          absent_subset(absent) {}

    IndexSubset present_superset;
    IndexSubset absent_subset;
};

/// Raised when a required singleton {j} is missing from the family.
class MissingSingletonError : public std::runtime_error {
  public:
    explicit MissingSingletonError(int j)
        : std::runtime_error("singleton {" + std::to_string(j) + "} is not a member"),
          element(j) {}

    int element;
};

/// A downward-closed family of subsets of {1,...,n} containing the empty
/// set and every singleton. Immutable after construction; all queries are
/// pure and safe to use concurrently.
///
/// Storage keeps the full member family (one bit per subset of [n]) for
/// O(1) membership, plus the member and maximal-member lists in canonical
/// order for iteration and serialization.
class IndependenceSystem {
  public:
    /// Builds the system with exactly the given members. Validates; never
    /// completes a non-closed input silently.
    static IndependenceSystem from_member_list(int n, const std::vector<IndexSubset>& sets);

    /// Builds the downward closure of the given sets together with the
    /// empty set and all singletons. With strict on (the default) every
    /// singleton must already be covered by some input set; with strict
    /// off, uncovered singletons are added.
    static IndependenceSystem from_maximal(int n, const std::vector<IndexSubset>& maximal_sets,
                                           bool strict = true);

    int ground_size() const { return n_; }

    bool contains(const IndexSubset& subset) const;

    /// All members, canonically ordered.
    const std::vector<IndexSubset>& members() const { return members_; }

    /// Members with no proper superset in the family, canonically ordered.
    const std::vector<IndexSubset>& maximal_members() const { return maximal_; }

    std::size_t member_count() const { return members_.size(); }

    /// The minimally dependent sets: every subset outside the family all of
    /// whose one-element-removed subsets are inside. Each has >= 2 elements.
    std::vector<IndexSubset> circuits() const;

    friend bool operator==(const IndependenceSystem& a, const IndependenceSystem& b) {
        return a.n_ == b.n_ && a.member_bits_ == b.member_bits_;
    }
    friend bool operator!=(const IndependenceSystem& a, const IndependenceSystem& b) {
        return !(a == b);
    }

  private:
    IndependenceSystem(int n, std::vector<bool> member_bits);

    int n_ = 0;
    std::vector<bool> member_bits_;  // indexed by subset bitmask, size 2^n
    std::vector<IndexSubset> members_;
    std::vector<IndexSubset> maximal_;
};

}  // namespace gptd
