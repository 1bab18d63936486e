#include "gptd/indep_system.hpp"

#include <algorithm>
#include <bit>

namespace gptd {

namespace {

int checked_ground(int n) {
    if (n < 1 || n > IndexSubset::kMaxGround) {
        throw std::invalid_argument("IndependenceSystem: ground size must be in [1," +
                                    std::to_string(IndexSubset::kMaxGround) + "]");
    }
    return n;
}

}  // namespace

IndependenceSystem::IndependenceSystem(int n, std::vector<bool> member_bits)
    : n_(n), member_bits_(std::move(member_bits)) {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1U;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!member_bits_[m]) continue;
        members_.push_back(IndexSubset::from_bits(n_, m));
        // Maximal iff no one-element extension is a member.
        bool maximal = true;
        for (int j = 0; j < n_ && maximal; ++j) {
            const std::uint32_t up = m | (std::uint32_t{1} << j);
            if (up != m && member_bits_[up]) maximal = false;
        }
        if (maximal) maximal_.push_back(IndexSubset::from_bits(n_, m));
    }
    std::sort(members_.begin(), members_.end());
    std::sort(maximal_.begin(), maximal_.end());
}

IndependenceSystem IndependenceSystem::from_member_list(int n,
                                                        const std::vector<IndexSubset>& sets) {
    checked_ground(n);
    std::vector<bool> bits(std::size_t{1} << n, false);
    for (const IndexSubset& s : sets) {
        if (s.ground_size() != n) {
            throw std::invalid_argument("IndependenceSystem: member on wrong ground set " +
                                        s.str());
        }
        bits[s.bits()] = true;
    }
    for (int j = 1; j <= n; ++j) {
        if (!bits[std::uint32_t{1} << (j - 1)]) throw MissingSingletonError(j);
    }
    // Downward closure fails somewhere iff it fails one element down.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1U;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (!bits[m]) continue;
        for (std::uint32_t rem = m; rem != 0; rem &= rem - 1) {
            const std::uint32_t lower = m & ~(rem & -rem);
            if (!bits[lower]) {
                throw NotDownwardClosedError(IndexSubset::from_bits(n, m),
                                             IndexSubset::from_bits(n, lower));
            }
        }
    }
    return IndependenceSystem(n, std::move(bits));
}

IndependenceSystem IndependenceSystem::from_maximal(int n,
                                                    const std::vector<IndexSubset>& maximal_sets,
                                                    bool strict) {
    checked_ground(n);
    std::uint32_t covered = 0;
    std::vector<bool> bits(std::size_t{1} << n, false);
    bits[0] = true;
    for (const IndexSubset& s : maximal_sets) {
        if (s.ground_size() != n) {
            throw std::invalid_argument("IndependenceSystem: maximal set on wrong ground set " +
                                        s.str());
        }
        covered |= s.bits();
        // Enumerate all submasks of s.
        const std::uint32_t top = s.bits();
        for (std::uint32_t sub = top;; sub = (sub - 1) & top) {
            bits[sub] = true;
            if (sub == 0) break;
        }
    }
    for (int j = 1; j <= n; ++j) {
        const std::uint32_t bit = std::uint32_t{1} << (j - 1);
        if ((covered & bit) == 0) {
            if (strict) throw MissingSingletonError(j);
            bits[bit] = true;
        }
    }
    return IndependenceSystem(n, std::move(bits));
}

bool IndependenceSystem::contains(const IndexSubset& subset) const {
    if (subset.ground_size() != n_) {
        throw std::invalid_argument("IndependenceSystem: query on wrong ground set");
    }
    return member_bits_[subset.bits()];
}

std::vector<IndexSubset> IndependenceSystem::circuits() const {
    std::vector<IndexSubset> out;
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1U;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (member_bits_[m]) continue;
        bool minimal = true;
        for (std::uint32_t rem = m; rem != 0 && minimal; rem &= rem - 1) {
            if (!member_bits_[m & ~(rem & -rem)]) minimal = false;
        }
        if (minimal) out.push_back(IndexSubset::from_bits(n_, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gptd
