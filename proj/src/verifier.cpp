#include "gptd/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace gptd {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

RealizationReport verify_realization(const IndependenceSystem& system) {
    auto t0 = std::chrono::steady_clock::now();
    const ConstructionOutput built = build(system);
    const double build_ms = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    JpdFamilyStats stats;
    IndependenceSystem realized = jpd_family(built.space, built.vertex_positions, &stats);
    const double family_ms = elapsed_ms(t0);

    RealizationReport report{system, std::move(realized), false, {}, build_ms, family_ms};
    report.match = (report.input_system == report.realized_system);
    for (const auto& [subset, verdict] : stats.verdicts) {
        report.subsets[subset] =
            SubsetReport{system.contains(subset), verdict.jpd, verdict.lp_calls};
    }
    return report;
}

std::vector<IndependenceSystem> enumerate_systems(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("enumerate_systems: n must be positive");
    if (n > 4 && !allow_large) {
        throw std::invalid_argument(
            "enumerate_systems: n > 4 is exponential in 2^n; pass allow_large to override");
    }
    if (n > 5) throw std::invalid_argument("enumerate_systems: n > 5 not supported");

    // The size->=2 layer in canonical order; a family of layer sets plus
    // the empty set and singletons is a valid system iff it is closed one
    // element down within the layer.
    std::vector<IndexSubset> layer;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1U;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (std::popcount(m) >= 2) layer.push_back(IndexSubset::from_bits(n, m));
    }
    std::sort(layer.begin(), layer.end());
    const int layer_size = static_cast<int>(layer.size());

    std::vector<int> layer_pos(std::size_t{1} << n, -1);
    for (int i = 0; i < layer_size; ++i) layer_pos[layer[static_cast<std::size_t>(i)].bits()] = i;

    std::vector<IndependenceSystem> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << layer_size); ++pick) {
        bool closed = true;
        for (int i = 0; i < layer_size && closed; ++i) {
            if (!((pick >> i) & 1U)) continue;
            const IndexSubset& h = layer[static_cast<std::size_t>(i)];
            if (h.size() == 2) continue;
            for (int j : h.elements()) {
                const int down = layer_pos[h.without(j).bits()];
                if (!((pick >> down) & 1U)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;

        std::vector<IndexSubset> members;
        members.push_back(IndexSubset(n));
        for (int j = 1; j <= n; ++j) members.push_back(IndexSubset(n, {j}));
        for (int i = 0; i < layer_size; ++i) {
            if ((pick >> i) & 1U) members.push_back(layer[static_cast<std::size_t>(i)]);
        }
        out.push_back(IndependenceSystem::from_member_list(n, members));
    }
    return out;
}

IndependenceSystem random_system(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_system: n must be positive");
    if (n == 1) return IndependenceSystem::from_maximal(1, {IndexSubset::full(1)});

    const std::uint32_t full = (std::uint32_t{1} << n) - 1U;
    std::uniform_int_distribution<std::uint32_t> mask_dist(1, full);
    std::uniform_int_distribution<int> count_dist(1, 2 * n);

    const int draws = count_dist(rng);
    std::vector<IndexSubset> antichain;
    for (int d = 0; d < draws; ++d) {
        std::uint32_t mask = mask_dist(rng);
        while (std::popcount(mask) < 2) mask = mask_dist(rng);
        const IndexSubset candidate = IndexSubset::from_bits(n, mask);
        bool comparable = false;
        for (const IndexSubset& kept : antichain) {
            if (candidate.comparable_with(kept)) {
                comparable = true;
                break;
            }
        }
        if (!comparable) antichain.push_back(candidate);
    }
    return IndependenceSystem::from_maximal(n, antichain, /*strict=*/false);
}

PeProfile pe_profile(const StateSpace& space, const std::vector<int>& states) {
    const int m = static_cast<int>(states.size());
    const std::uint32_t full = (std::uint32_t{1} << m) - 1U;

    // F over all subsets; empty and singleton subsets cost nothing.
    std::vector<Rat> values(std::size_t{1} << m, Rat(0));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> selected;
        for (int j = 0; j < m; ++j) {
            if ((mask >> j) & 1U) selected.push_back(states[static_cast<std::size_t>(j)]);
        }
        values[mask] = symmetric_error(space, selected).value;
    }

    PeProfile profile;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) >= 2) {
            profile.rows.push_back(PeProfileRow{IndexSubset::from_bits(m, mask), values[mask]});
        }
    }
    std::sort(profile.rows.begin(), profile.rows.end(),
              [](const PeProfileRow& a, const PeProfileRow& b) { return a.subset < b.subset; });

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int j = 0; j < m; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << j;
            if (mask & bit) continue;
            const std::uint32_t bigger = mask | bit;
            if (values[mask] > values[bigger]) {
                profile.monotone_ok = false;
                profile.monotone_violations.emplace_back(IndexSubset::from_bits(m, mask),
                                                         IndexSubset::from_bits(m, bigger));
            }
            if (values[bigger] > values[mask] + Rat(1)) {
                profile.lipschitz_ok = false;
                profile.lipschitz_violations.emplace_back(IndexSubset::from_bits(m, mask), j + 1);
            }
        }
    }
    return profile;
}

std::vector<RealizationReport> verify_many(const std::vector<IndependenceSystem>& systems,
                                           int threads) {
    std::vector<RealizationReport> reports;
    reports.reserve(systems.size());
    if (threads <= 1 || systems.size() <= 1) {
        for (const IndependenceSystem& s : systems) reports.push_back(verify_realization(s));
        return reports;
    }

    // Work units are independent; results land in input order. A worker
    // exception is parked and rethrown on the caller's thread after join.
    std::vector<std::optional<RealizationReport>> slots(systems.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= systems.size()) return;
            try {
                slots[i] = verify_realization(systems[i]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(systems.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

}  // namespace gptd
