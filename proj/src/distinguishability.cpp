#include "gptd/distinguishability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "gptd/lp.hpp"

namespace gptd {

namespace {

void check_positions(const StateSpace& space, const std::vector<int>& states) {
    if (states.empty()) throw std::invalid_argument("state list must be non-empty");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] < 0 || states[i] >= space.generator_count()) {
            throw std::out_of_range("state position " + std::to_string(states[i]) +
                                    " out of range");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (states[k] == states[i]) {
                throw std::invalid_argument("duplicate state position " +
                                            std::to_string(states[i]));
            }
        }
    }
}

// Variable layout for the measurement LPs: entry (i,k) of the m x n
// matrix at index i*n + k.
int var_of(int i, int k, int n) { return i * n + k; }

// Shared constraints of both measurement LPs:
//   (a) every column of M sums to 1,
//   (c) (M v)_i >= 0 for every generator v and every outcome i.
LinearProgram measurement_polytope(const StateSpace& space, int m) {
    const int n = space.dimension();
    LinearProgram lp;
    lp.num_vars = m * n;
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(lp.num_vars), Rat(0));
        for (int i = 0; i < m; ++i) coeffs[static_cast<std::size_t>(var_of(i, k, n))] = Rat(1);
        lp.add_constraint(std::move(coeffs), Relation::Equal, Rat(1));
    }
    for (const RPoint& v : space.generators()) {
        for (int i = 0; i < m; ++i) {
            std::vector<Rat> coeffs(static_cast<std::size_t>(lp.num_vars), Rat(0));
            for (int k = 0; k < n; ++k) {
                coeffs[static_cast<std::size_t>(var_of(i, k, n))] = v[k];
            }
            lp.add_constraint(std::move(coeffs), Relation::GreaterEq, Rat(0));
        }
    }
    return lp;
}

Measurement measurement_from_witness(const std::vector<Rat>& witness, int m, int n) {
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            row.push_back(witness[static_cast<std::size_t>(var_of(i, k, n))]);
        }
    }
    return Measurement(std::move(rows));
}

}  // namespace

Measurement::Measurement(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) {
        throw std::invalid_argument("Measurement: matrix must be non-empty");
    }
    const std::size_t n = rows_.front().size();
    for (const auto& row : rows_) {
        if (row.size() != n) throw std::invalid_argument("Measurement: ragged matrix");
    }
    for (std::size_t k = 0; k < n; ++k) {
        Rat sum;
        for (const auto& row : rows_) sum += row[k];
        if (sum != Rat(1)) {
            throw std::invalid_argument("Measurement: column " + std::to_string(k + 1) +
                                        " sums to " + sum.str() + ", expected 1");
        }
    }
}

RPoint Measurement::apply(const RPoint& p) const {
    if (p.dimension() != dimension()) {
        throw std::invalid_argument("Measurement: state dimension mismatch");
    }
    std::vector<Rat> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        Rat v;
        for (std::size_t k = 0; k < row.size(); ++k) v += row[k] * p[static_cast<int>(k)];
        out.push_back(std::move(v));
    }
    return RPoint(std::move(out));
}

bool Measurement::valid_for(const StateSpace& space) const {
    if (space.dimension() != dimension()) return false;
    for (const RPoint& g : space.generators()) {
        if (!in_simplex(apply(g))) return false;
    }
    return true;
}

JpdResult is_jpd(const StateSpace& space, const std::vector<int>& states) {
    check_positions(space, states);
    const int n = space.dimension();
    const int m = static_cast<int>(states.size());

    if (m == 1) {
        // The constant measurement distinguishes a single state.
        std::vector<std::vector<Rat>> rows{std::vector<Rat>(static_cast<std::size_t>(n), Rat(1))};
        return JpdResult{true, Measurement(std::move(rows))};
    }

    LinearProgram lp = measurement_polytope(space, m);
    // (b) the t-th listed state maps to the t-th outcome vertex.
    for (int t = 0; t < m; ++t) {
        const RPoint& s = space.generator(states[static_cast<std::size_t>(t)]);
        for (int i = 0; i < m; ++i) {
            std::vector<Rat> coeffs(static_cast<std::size_t>(lp.num_vars), Rat(0));
            for (int k = 0; k < n; ++k) {
                coeffs[static_cast<std::size_t>(var_of(i, k, n))] = s[k];
            }
            lp.add_constraint(std::move(coeffs), Relation::Equal, (i == t) ? Rat(1) : Rat(0));
        }
    }

    const auto point = feasible_point(lp);
    if (!point) return JpdResult{false, std::nullopt};

    Measurement witness = measurement_from_witness(*point, m, n);
    if (!witness.valid_for(space)) {
        throw std::logic_error("is_jpd: solver witness failed independent re-check");
    }
    for (int t = 0; t < m; ++t) {
        if (witness.apply(space.generator(states[static_cast<std::size_t>(t)])) !=
            simplex_vertex(t + 1, m)) {
            throw std::logic_error("is_jpd: witness does not pin state " + std::to_string(t + 1));
        }
    }
    return JpdResult{true, std::move(witness)};
}

bool is_antipodal(const StateSpace& space, int a, int b) {
    if (a == b) throw std::invalid_argument("is_antipodal: states must be distinct");
    return is_jpd(space, {a, b}).jpd;
}

ErrorReport symmetric_error(const StateSpace& space, const std::vector<int>& states) {
    check_positions(space, states);
    const int n = space.dimension();
    const int m = static_cast<int>(states.size());

    LinearProgram lp = measurement_polytope(space, m);
    // Total error = m - sum_t (M s_t)_t, so minimize the negated hit terms.
    lp.objective.assign(static_cast<std::size_t>(lp.num_vars), Rat(0));
    for (int t = 0; t < m; ++t) {
        const RPoint& s = space.generator(states[static_cast<std::size_t>(t)]);
        for (int k = 0; k < n; ++k) {
            lp.objective[static_cast<std::size_t>(var_of(t, k, n))] -= s[k];
        }
    }

    const LPResult result = solve(lp);
    if (result.status != LPStatus::Optimal) {
        throw std::logic_error("symmetric_error: measurement polytope LP was not optimal");
    }
    Measurement best = measurement_from_witness(result.witness, m, n);
    if (!best.valid_for(space)) {
        throw std::logic_error("symmetric_error: solver witness failed independent re-check");
    }

    // Re-evaluate the error sum from the witness itself.
    Rat value(m);
    for (int t = 0; t < m; ++t) {
        value -= best.apply(space.generator(states[static_cast<std::size_t>(t)]))[t];
    }
    return ErrorReport{std::move(value), std::move(best)};
}

IndependenceSystem jpd_family(const StateSpace& space, const std::vector<int>& states,
                              JpdFamilyStats* stats) {
    check_positions(space, states);
    const int m = static_cast<int>(states.size());
    const std::uint32_t full = (std::uint32_t{1} << m) - 1U;

    // known[mask]: 0 unknown, +1 jpd, -1 not jpd.
    std::vector<signed char> known(std::size_t{1} << m, 0);
    known[0] = 1;
    for (int j = 0; j < m; ++j) known[std::uint32_t{1} << j] = 1;

    std::vector<IndexSubset> members;
    members.push_back(IndexSubset(m));
    for (int j = 1; j <= m; ++j) members.push_back(IndexSubset(m, {j}));
    if (stats) {
        for (int j = 1; j <= m; ++j) {
            stats->verdicts[IndexSubset(m, {j})] = SubsetVerdict{true, 0};
        }
    }

    // Layer by layer; a failure marks all supersets in one sweep.
    for (int card = 2; card <= m; ++card) {
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) != card) continue;
            const IndexSubset subset = IndexSubset::from_bits(m, mask);
            if (known[mask] < 0) {  // pruned: some subset already failed
                if (stats) stats->verdicts[subset] = SubsetVerdict{false, 0};
                continue;
            }
            std::vector<int> selected;
            for (int j : subset.elements()) {
                selected.push_back(states[static_cast<std::size_t>(j - 1)]);
            }
            const bool jpd = is_jpd(space, selected).jpd;
            known[mask] = jpd ? 1 : -1;
            if (stats) {
                stats->verdicts[subset] = SubsetVerdict{jpd, 1};
                stats->total_lp_calls += 1;
            }
            if (jpd) {
                members.push_back(subset);
            } else {
                for (std::uint32_t sup = mask; sup <= full; ++sup) {
                    if ((sup & mask) == mask) known[sup] = -1;
                }
            }
        }
    }
    return IndependenceSystem::from_member_list(m, members);
}

}  // namespace gptd
