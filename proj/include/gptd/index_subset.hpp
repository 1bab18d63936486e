#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gptd {

/// Subset of the ground set {1,...,n}, stored as a bitmask. Element j is
/// held in bit j-1; indices are 1-based in the whole public API and 0-based
/// only inside the mask. Ground sizes are capped so families of subsets
/// stay enumerable.
class IndexSubset {
  public:
    static constexpr int kMaxGround = 20;

    IndexSubset() = default;  // empty subset of an empty ground set, for containers

    explicit IndexSubset(int n) : n_(checked_ground(n)) {}

    IndexSubset(int n, std::initializer_list<int> elements) : n_(checked_ground(n)) {
        for (int j : elements) insert(j);
    }

    static IndexSubset from_elements(int n, const std::vector<int>& elements) {
        IndexSubset s(n);
        for (int j : elements) s.insert(j);
        return s;
    }

    static IndexSubset from_bits(int n, std::uint32_t bits) {
        IndexSubset s(n);
        if (n < kMaxGround && (bits >> n) != 0) {
            throw std::out_of_range("IndexSubset: bit outside ground set");
        }
        s.bits_ = bits;
        return s;
    }

    static IndexSubset full(int n) {
        IndexSubset s(n);
        s.bits_ = (n == 0) ? 0U : ((std::uint32_t{1} << n) - 1U);
        return s;
    }

    int ground_size() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full(n_).bits_; }

    bool contains(int j) const {
        check_element(j);
        return (bits_ >> (j - 1)) & 1U;
    }

    IndexSubset with(int j) const {
        IndexSubset s(*this);
        s.insert(j);
        return s;
    }

    IndexSubset without(int j) const {
        check_element(j);
        IndexSubset s(*this);
        s.bits_ &= ~(std::uint32_t{1} << (j - 1));
        return s;
    }

    bool subset_of(const IndexSubset& other) const {
        check_same_ground(other);
        return (bits_ & ~other.bits_) == 0;
    }

    bool proper_subset_of(const IndexSubset& other) const {
        return subset_of(other) && bits_ != other.bits_;
    }

    /// Comparable under inclusion in either direction.
    bool comparable_with(const IndexSubset& other) const {
        return subset_of(other) || other.subset_of(*this);
    }

    IndexSubset united(const IndexSubset& other) const {
        check_same_ground(other);
        return from_bits(n_, bits_ | other.bits_);
    }

    IndexSubset intersected(const IndexSubset& other) const {
        check_same_ground(other);
        return from_bits(n_, bits_ & other.bits_);
    }

    IndexSubset minus(const IndexSubset& other) const {
        check_same_ground(other);
        return from_bits(n_, bits_ & ~other.bits_);
    }

    /// Complement within [n].
    IndexSubset complement() const { return from_bits(n_, ~bits_ & full(n_).bits_); }

    /// Elements in ascending order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int j = 1; j <= n_; ++j) {
            if ((bits_ >> (j - 1)) & 1U) out.push_back(j);
        }
        return out;
    }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int j : elements()) {
            if (!first) out += ",";
            out += std::to_string(j);
            first = false;
        }
        out += "}";
        return out;
    }

    friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const IndexSubset& a, const IndexSubset& b) { return !(a == b); }

    /// Canonical order: lexicographic on the sorted element tuple, so
    /// {} < {1} < {1,2} < {1,3} < {2}. This is the order used everywhere a
    /// family of subsets is serialized or iterated deterministically.
    friend bool operator<(const IndexSubset& a, const IndexSubset& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        std::uint32_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            const int ex = std::countr_zero(x), ey = std::countr_zero(y);
            if (ex != ey) return ex < ey;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

  private:
    static int checked_ground(int n) {
        if (n < 1 || n > kMaxGround) {
            throw std::invalid_argument("IndexSubset: ground size must be in [1," +
                                        std::to_string(kMaxGround) + "]");
        }
        return n;
    }

    void check_element(int j) const {
        if (j < 1 || j > n_) {
            throw std::out_of_range("IndexSubset: element " + std::to_string(j) +
                                    " outside ground set [" + std::to_string(n_) + "]");
        }
    }

    void check_same_ground(const IndexSubset& other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument("IndexSubset: mismatched ground sets");
        }
    }

    void insert(int j) {
        check_element(j);
        bits_ |= std::uint32_t{1} << (j - 1);
    }

    int n_ = 0;
    std::uint32_t bits_ = 0;
};

}  // namespace gptd
