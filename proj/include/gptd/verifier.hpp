#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gptd/construction.hpp"
#include "gptd/distinguishability.hpp"
#include "gptd/indep_system.hpp"

namespace gptd {

struct SubsetReport {
    bool expected = false;
    bool got = false;
    long lp_calls = 0;
};

/// Outcome of realizing one independence system and re-deriving it from
/// the built space. match is the claim under test: the re-derived family
/// equals the input exactly.
struct RealizationReport {
    IndependenceSystem input_system;
    IndependenceSystem realized_system;
    bool match = false;
    std::map<IndexSubset, SubsetReport> subsets;
    double build_ms = 0.0;
    double family_ms = 0.0;
};

/// Builds the state space for the system, computes the distinguishability
/// family of its vertices, and compares. A mismatch is reported, never
/// swallowed.
RealizationReport verify_realization(const IndependenceSystem& system);

/// Every independence system on [n], each exactly once, in a fixed
/// canonical order. Enumerates the down-closed sub-families of the
/// size->=2 layer directly; the layer has 2^n - n - 1 sets, so n is
/// guarded to keep the sweep at desk scale. Pass allow_large to override.
std::vector<IndependenceSystem> enumerate_systems(int n, bool allow_large = false);

/// A reproducible random system: draws random subsets of size >= 2,
/// discards any draw comparable with one already kept, and closes the
/// resulting antichain downward (singletons added as needed).
IndependenceSystem random_system(int n, std::mt19937_64& rng);

struct PeProfileRow {
    IndexSubset subset;
    Rat value;
};

/// Exact minimum symmetric error for every subset of the listed states,
/// with the two order properties checked across the whole table: growing
/// the subset never lowers the error, and adding one state raises it by
/// at most 1.
struct PeProfile {
    std::vector<PeProfileRow> rows;  // subsets with >= 2 elements, canonical order
    bool monotone_ok = true;
    bool lipschitz_ok = true;
    std::vector<std::pair<IndexSubset, IndexSubset>> monotone_violations;
    std::vector<std::pair<IndexSubset, int>> lipschitz_violations;
};

PeProfile pe_profile(const StateSpace& space, const std::vector<int>& states);

/// Runs verify_realization over many systems, optionally across threads.
/// Results are returned in input order regardless of scheduling.
std::vector<RealizationReport> verify_many(const std::vector<IndependenceSystem>& systems,
                                           int threads = 1);

}  // namespace gptd
