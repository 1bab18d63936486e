#pragma once

#include <string>
#include <vector>

#include "gptd/index_subset.hpp"
#include "gptd/rational.hpp"

namespace gptd {

/// A point of the affine hyperplane of R^n whose coordinates sum to
/// exactly 1. The sum invariant is checked on construction, so holding an
/// RPoint is proof of membership.
class RPoint {
  public:
    explicit RPoint(std::vector<Rat> coords);

    int dimension() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    std::string str() const;

    friend bool operator==(const RPoint& a, const RPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const RPoint& a, const RPoint& b) { return !(a == b); }

  private:
    std::vector<Rat> coords_;
};

/// The j-th vertex of the n-simplex (1-based j), i.e. the distribution
/// putting all mass on outcome j.
RPoint simplex_vertex(int j, int n);

/// Indicator vector of H inside R^n: coordinate j is 1 iff j is in H.
/// Returned as a raw vector because its coordinate sum is |H|, so it is an
/// RPoint only when |H| = 1.
std::vector<Rat> indicator(const IndexSubset& subset, int n);

/// Orthogonal projection onto the m-dimensional sum-1 hyperplane:
/// (t_1,...,t_n) -> (t_1 + r, ..., t_m + r) with r = (t_{m+1}+...+t_n)/m.
/// Affine, maps the n-simplex onto the m-simplex, and is the identity for
/// m = n.
RPoint project(const RPoint& point, int m);

/// Whether every coordinate is >= 0 (exact), i.e. the point lies in the
/// simplex of its dimension.
bool in_simplex(const RPoint& point);

/// Exact weighted sum. Weights must be non-negative and sum to exactly 1.
RPoint convex_combination(const std::vector<RPoint>& points, const std::vector<Rat>& weights);

/// A convex polytope inside the sum-1 hyperplane, given by its generator
/// list (V-representation). Generators need not be vertices; redundant
/// generators are harmless to every decision built on top.
class StateSpace {
  public:
    StateSpace(int n, std::vector<RPoint> generators, std::vector<std::string> labels = {});

    int dimension() const { return n_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::vector<RPoint>& generators() const { return generators_; }
    const RPoint& generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }

    /// One label per generator; empty strings for unlabeled generators.
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    int n_;
    std::vector<RPoint> generators_;
    std::vector<std::string> labels_;
};

}  // namespace gptd
