#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sdfea/rng.hpp"

namespace sdfea {

// Fixed-length binary search point. Packed into 64-bit words; bits past
// the length are kept zero so popcount-based queries stay branch-free.
class BitString {
public:
    BitString() = default;
    explicit BitString(int n) : n_(n), w_(word_count(n), 0) {}

    static BitString random(int n, RandomSource& rng);
    static BitString all_ones(int n);

    int size() const noexcept { return n_; }

    bool test(int i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
    }
    void flip(int i) noexcept { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    int ones_count() const noexcept {
        int c = 0;
        for (const auto w : w_) c += std::popcount(w);
        return c;
    }

    // Length of the maximal all-ones prefix (bit 0 first).
    int leading_ones() const noexcept {
        int c = 0;
        for (const auto w : w_) {
            const int ones = std::countr_one(w);
            c += ones;
            if (ones < 64) break;
        }
        return c < n_ ? c : n_;
    }

    BitString complement() const;

    bool operator==(const BitString&) const = default;

    const std::vector<std::uint64_t>& words() const noexcept { return w_; }

private:
    static int word_count(int n) noexcept { return (n + 63) >> 6; }
    std::uint64_t tail_mask() const noexcept {
        const int r = n_ & 63;
        return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Number of positions where x and y differ. Same-length inputs only;
// a mismatch is a caller bug and is rejected at the boundary.
int hamming_distance(const BitString& x, const BitString& y);

// Uniform selection of s distinct positions out of [0..n). Partial
// Fisher-Yates over a persistent pool: O(s) per draw after O(n) setup.
// The pool is left permuted between draws, which does not affect
// uniformity of the selected subset.
class SubsetSampler {
public:
    explicit SubsetSampler(int n);
    int size() const noexcept { return static_cast<int>(pool_.size()); }
    // Fills out with s distinct positions, uniform over all size-s subsets.
    void sample(int s, RandomSource& rng, std::vector<int>& out);

private:
    std::vector<int> pool_;
};

// y differs from x in exactly s positions, uniform over all size-s subsets.
BitString flip_random_bits(const BitString& x, int s, RandomSource& rng);

// Each bit flipped independently with probability p. Implemented as a
// Binomial(n, p) flip count followed by a uniform subset of positions,
// which has the same distribution and costs O(1 + np) instead of O(n).
BitString standard_bit_mutation(const BitString& x, double p, RandomSource& rng);

}  // namespace sdfea
