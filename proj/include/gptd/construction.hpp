#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gptd/convex.hpp"
#include "gptd/indep_system.hpp"
#include "gptd/rational.hpp"

namespace gptd {

/// Result of realizing an independence system as a state space: the n
/// simplex vertices plus one ruin point per (circuit, element) pair, with
/// the generator position of every named point.
struct ConstructionOutput {
    StateSpace space;
    std::vector<int> vertex_positions;                    // vertex j (1-based) at entry j-1
    std::map<std::pair<IndexSubset, int>, int> ruin_positions;  // (circuit, element) -> position
    Rat epsilon;
};

/// The perturbation constant 1/(3n^2). Requires n >= 2.
Rat epsilon(int n);

/// The generator added to destroy joint distinguishability of the vertices
/// indexed by H, in the direction of element j. Requires j in H, |H| >= 2.
/// Its coordinates sum to 1 and its j-th coordinate is strictly negative,
/// so the point lies in the sum-1 hyperplane but outside the simplex.
RPoint ruin_point(const IndexSubset& circuit, int j, int n);

/// Builds the state space whose jointly-perfectly-distinguishable vertex
/// subsets are exactly the members of the given system: the n simplex
/// vertices, then ruin_point(H, j) for every circuit H and j in H, ordered
/// by (H, j). A circuit-free system yields the bare simplex.
ConstructionOutput build(const IndependenceSystem& system);

}  // namespace gptd
