// Acceptance suite: the eight exactness criteria the toolkit must meet,
// run end to end with one pass/fail line each. Everything is exact
// rational arithmetic; there are no tolerances anywhere. Exit code is the
// number of failed criteria.

#include <algorithm>
#include <bit>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gptd/construction.hpp"
#include "gptd/convex.hpp"
#include "gptd/distinguishability.hpp"
#include "gptd/lp.hpp"
#include "gptd/verifier.hpp"
#include "support/lp_oracle.hpp"

namespace {

using namespace gptd;

constexpr std::uint64_t kSeedN5 = 42;
constexpr std::uint64_t kSeedN6 = 43;
constexpr int kCountN5 = 100;
constexpr int kCountN6 = 20;
constexpr int kThreads = 2;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::vector<IndependenceSystem> sampled_systems() {
    std::vector<IndependenceSystem> systems;
    std::mt19937_64 rng5(kSeedN5);
    for (int i = 0; i < kCountN5; ++i) systems.push_back(random_system(5, rng5));
    std::mt19937_64 rng6(kSeedN6);
    for (int i = 0; i < kCountN6; ++i) systems.push_back(random_system(6, rng6));
    return systems;
}

// ---- criterion 1: the realization theorem, exhaustively for n <= 4 ----

std::string criterion_exhaustive() {
    long total = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto systems = enumerate_systems(n);
        const auto reports = verify_many(systems, kThreads);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            expect(reports[i].match,
                   "mismatch at n=" + std::to_string(n) + ", system index " + std::to_string(i));
        }
        total += static_cast<long>(systems.size());
    }
    return "all " + std::to_string(total) + " systems on [1]..[4] realized exactly";
}

// ---- criterion 2: the theorem on random systems at n = 5 and 6 ----

std::string criterion_sampled() {
    const auto systems = sampled_systems();
    const auto reports = verify_many(systems, kThreads);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        expect(reports[i].match, "mismatch at sampled system index " + std::to_string(i));
    }
    std::ostringstream os;
    os << kCountN5 << " systems at n=5 (seed " << kSeedN5 << ") and " << kCountN6
       << " at n=6 (seed " << kSeedN6 << ") all match";
    return os.str();
}

// ---- criterion 3: dependent vertex sets are not distinguishable ----

std::string criterion_not_jpd() {
    const auto full_circuit = IndependenceSystem::from_maximal(
        3, {IndexSubset(3, {1, 2}), IndexSubset(3, {1, 3}), IndexSubset(3, {2, 3})});
    expect(!is_jpd(build(full_circuit).space, {0, 1, 2}).jpd,
           "{1,2,3} reported distinguishable in the {{1,2,3}}-circuit space");

    const auto pair_circuit = IndependenceSystem::from_member_list(
        3, {IndexSubset(3), IndexSubset(3, {1}), IndexSubset(3, {2}), IndexSubset(3, {3}),
            IndexSubset(3, {1, 3}), IndexSubset(3, {2, 3})});
    expect(!is_jpd(build(pair_circuit).space, {0, 1}).jpd,
           "{1,2} reported distinguishable in the {{1,2}}-circuit space");
    return "both dependent spot checks correctly fail";
}

// ---- criterion 4: independent pairs distinguish via the projection ----

std::string criterion_projection_witness() {
    const auto seven = IndependenceSystem::from_maximal(
        3, {IndexSubset(3, {1, 2}), IndexSubset(3, {1, 3}), IndexSubset(3, {2, 3})});
    const auto built = build(seven);

    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [a, b] : pairs) {
        // Projection onto the (a,b) coordinate plane: the two named
        // coordinates each pick up half of the remaining mass.
        std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(3, Rat(0)));
        for (int k = 1; k <= 3; ++k) {
            if (k == a) {
                rows[0][k - 1] = Rat(1);
            } else if (k == b) {
                rows[1][k - 1] = Rat(1);
            } else {
                rows[0][k - 1] = Rat(1, 2);
                rows[1][k - 1] = Rat(1, 2);
            }
        }
        const Measurement witness(std::move(rows));
        expect(witness.valid_for(built.space),
               "projection witness invalid for pair {" + std::to_string(a) + "," +
                   std::to_string(b) + "}");
        expect(witness.apply(built.space.generator(a - 1)) == simplex_vertex(1, 2),
               "projection does not pin the first state of the pair");
        expect(witness.apply(built.space.generator(b - 1)) == simplex_vertex(2, 2),
               "projection does not pin the second state of the pair");
        expect(is_jpd(built.space, {a - 1, b - 1}).jpd,
               "solver disagrees with the projection witness");
    }

    const int q3 = built.ruin_positions.at({IndexSubset(3, {1, 2, 3}), 3});
    const RPoint image = project(built.space.generator(q3), 2);
    expect(image == RPoint({Rat(1, 2), Rat(1, 2)}),
           "projected ruin point is " + image.str() + ", expected (1/2, 1/2)");
    expect(image[0] == Rat(1, 2) && image[1] == Rat(1, 2),
           "projected ruin point coordinates are not both 1/m");
    return "three projection witnesses validate; projected ruin point is (1/2, 1/2)";
}

// ---- criterion 5: ruin point coordinate invariants, zero violations ----

void check_ruin_points(const ConstructionOutput& built, long& checked) {
    const int n = built.space.dimension();
    const Rat eps = built.epsilon;
    const Rat lower = -(eps + eps);
    const Rat inside_floor = Rat(2L * n) * eps;
    for (const auto& [key, position] : built.ruin_positions) {
        const auto& [circuit, j] = key;
        const RPoint& q = built.space.generator(position);
        const int m = circuit.size();

        Rat sum;
        for (const Rat& c : q.coords()) sum += c;
        expect(sum == Rat(1), "ruin point coordinate sum is " + sum.str());
        expect(q[j - 1] < Rat(0), "ruin point " + q.str() + " not negative at its own index");
        for (int k = 1; k <= n; ++k) {
            const Rat& c = q[k - 1];
            if (k != j) expect(c > Rat(0), "non-distinguished coordinate not positive");
            expect(c >= lower, "coordinate below -2*eps");
            if (k != j && circuit.contains(k)) {
                expect(c >= inside_floor, "in-circuit coordinate below 2n*eps");
                if (m > 1 && m < n) {
                    for (int o = 1; o <= n; ++o) {
                        if (!circuit.contains(o)) {
                            expect(c > q[o - 1],
                                   "in-circuit coordinate not above out-of-circuit one");
                        }
                    }
                }
            }
        }
        ++checked;
    }
}

std::string criterion_construction_invariants() {
    long checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sys : enumerate_systems(n)) check_ruin_points(build(sys), checked);
    }
    for (const auto& sys : sampled_systems()) check_ruin_points(build(sys), checked);
    return std::to_string(checked) + " ruin points checked, zero violations";
}

// ---- criterion 6: order properties of the symmetric error ----

std::string criterion_error_properties() {
    struct SpaceProfile {
        ConstructionOutput built;
        std::vector<Rat> f;  // indexed by subset mask
    };
    std::vector<SpaceProfile> profiles;
    for (const auto& sys : enumerate_systems(3)) {
        SpaceProfile p{build(sys), std::vector<Rat>(8, Rat(0))};
        for (std::uint32_t mask = 1; mask < 8; ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> states;
            for (int j = 0; j < 3; ++j) {
                if ((mask >> j) & 1U) states.push_back(p.built.vertex_positions[j]);
            }
            p.f[mask] = symmetric_error(p.built.space, states).value;
        }
        profiles.push_back(std::move(p));
    }

    for (const auto& p : profiles) {
        for (std::uint32_t mask = 1; mask < 8; ++mask) {
            // Monotone and 1-Lipschitz in one-element steps.
            for (int j = 0; j < 3; ++j) {
                const std::uint32_t bit = std::uint32_t{1} << j;
                if (mask & bit) continue;
                expect(p.f[mask] <= p.f[mask | bit], "error not monotone under set growth");
                expect(p.f[mask | bit] <= p.f[mask] + Rat(1), "error grows by more than 1");
            }
            // Zero error exactly on distinguishable subsets.
            if (std::popcount(mask) >= 2) {
                std::vector<int> states;
                for (int j = 0; j < 3; ++j) {
                    if ((mask >> j) & 1U) states.push_back(p.built.vertex_positions[j]);
                }
                expect(is_jpd(p.built.space, states).jpd == (p.f[mask] == Rat(0)),
                       "zero error and distinguishability verdicts disagree");
            }
        }
    }

    // Random subset pairs and argument permutations on the same spaces.
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& p = profiles[rng() % profiles.size()];
        const std::uint32_t big = 1 + static_cast<std::uint32_t>(rng() % 7);
        std::uint32_t small = static_cast<std::uint32_t>(rng()) & big;
        expect(p.f[small] <= p.f[big], "random subset pair violates monotonicity");

        if (std::popcount(big) >= 2) {
            std::vector<int> states;
            for (int j = 0; j < 3; ++j) {
                if ((big >> j) & 1U) states.push_back(p.built.vertex_positions[j]);
            }
            std::shuffle(states.begin(), states.end(), rng);
            expect(symmetric_error(p.built.space, states).value == p.f[big],
                   "error value changed under argument permutation");
        }
    }
    return "monotone, 1-Lipschitz, zero-iff-jpd and permutation checks all exact";
}

// ---- criterion 7: solver agrees with the basic-solution oracle ----

std::string criterion_lp_oracle() {
    std::mt19937_64 rng(31337);
    int optimal = 0, infeasible = 0, unbounded = 0;
    const int trials = 250;
    for (int trial = 0; trial < trials; ++trial) {
        const LinearProgram lp = testing::random_small_lp(rng);
        const LPResult result = solve(lp);
        const auto oracle = testing::enumerate_basic_solutions(lp);

        const long vars = lp.num_vars;
        const long rows = static_cast<long>(lp.constraints.size());
        long ceiling = 1;
        for (long i = 1; i <= rows; ++i) ceiling = ceiling * (vars + i) / i;
        expect(result.pivot_count <= ceiling, "pivot count above the basis-count ceiling");

        switch (result.status) {
            case LPStatus::Optimal:
                ++optimal;
                expect(oracle.best.has_value(), "solver optimal but oracle found nothing");
                expect(result.objective_value == *oracle.best,
                       "optimum differs from oracle at trial " + std::to_string(trial));
                expect(satisfies(lp, result.witness), "witness fails re-substitution");
                break;
            case LPStatus::Infeasible:
                ++infeasible;
                expect(!oracle.any_feasible, "solver infeasible but oracle found a point");
                break;
            case LPStatus::Unbounded:
                ++unbounded;
                expect(oracle.any_feasible, "solver unbounded on an infeasible program");
                expect(testing::certify_unbounded(lp), "no verifiable unbounded ray");
                break;
        }
    }
    std::ostringstream os;
    os << trials << " random programs agree exactly (" << optimal << " optimal, " << infeasible
       << " infeasible, " << unbounded << " unbounded)";
    return os.str();
}

// ---- criterion 8: projection properties on random points ----

std::string criterion_projection_properties() {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> nonneg(0, 20);

    auto hyperplane_point = [&](int n) {
        std::vector<Rat> coords;
        Rat partial;
        for (int i = 0; i + 1 < n; ++i) {
            coords.emplace_back(num(rng), 1 + static_cast<long>(rng() % 12));
            partial += coords.back();
        }
        coords.push_back(Rat(1) - partial);
        return RPoint(std::move(coords));
    };
    auto simplex_point = [&](int n) {
        std::vector<Rat> coords(static_cast<std::size_t>(n));
        Rat sum;
        for (auto& c : coords) {
            c = Rat(nonneg(rng));
            sum += c;
        }
        if (sum.is_zero()) {
            coords[0] = Rat(1);
            sum = Rat(1);
        }
        for (auto& c : coords) c /= sum;
        return RPoint(std::move(coords));
    };

    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % n);
        const int k = 1 + static_cast<int>(rng() % m);

        const RPoint x = hyperplane_point(n);
        const RPoint y = hyperplane_point(n);
        const long d = 1 + static_cast<long>(rng() % 24);
        const Rat lambda(static_cast<long>(rng() % (d + 1)), d);

        const RPoint mixed = convex_combination({x, y}, {lambda, Rat(1) - lambda});
        expect(project(mixed, m) ==
                   convex_combination({project(x, m), project(y, m)}, {lambda, Rat(1) - lambda}),
               "projection is not affine");
        expect(in_simplex(project(simplex_point(n), m)), "projection left the simplex");
        expect(project(project(x, m), k) == project(x, k), "projection composition differs");
    }
    for (int n = 2; n <= 6; ++n) {
        for (int m = 1; m <= n; ++m) {
            for (int j = 1; j <= m; ++j) {
                expect(project(simplex_vertex(j, n), m) == simplex_vertex(j, m),
                       "vertex does not project to vertex");
            }
        }
    }
    return "500 random affinity/containment/composition checks plus vertex mapping, all exact";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria{
        {"realization theorem, exhaustive n=1..4", criterion_exhaustive},
        {"realization theorem, sampled n=5,6", criterion_sampled},
        {"dependent sets are not jointly distinguishable", criterion_not_jpd},
        {"independent pairs distinguish via projection", criterion_projection_witness},
        {"ruin point coordinate invariants", criterion_construction_invariants},
        {"symmetric error order properties", criterion_error_properties},
        {"exact solver vs basic-solution oracle", criterion_lp_oracle},
        {"projection map properties", criterion_projection_properties},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].name << " :: " << detail << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures;
}
