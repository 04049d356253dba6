#include "sdfea/bitstring.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sdfea {

BitString BitString::random(int n, RandomSource& rng) {
    BitString x(n);
    for (auto& w : x.w_) w = rng.next_u64();
    if (!x.w_.empty()) x.w_.back() &= x.tail_mask();
    return x;
}

BitString BitString::all_ones(int n) {
    BitString x(n);
    for (auto& w : x.w_) w = ~std::uint64_t{0};
    if (!x.w_.empty()) x.w_.back() &= x.tail_mask();
    return x;
}

BitString BitString::complement() const {
    BitString y(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) y.w_[i] = ~w_[i];
    if (!y.w_.empty()) y.w_.back() &= tail_mask();
    return y;
}

int hamming_distance(const BitString& x, const BitString& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch (" +
                                    std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    int d = 0;
    const auto& a = x.words();
    const auto& b = y.words();
    for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
    return d;
}

SubsetSampler::SubsetSampler(int n) : pool_(static_cast<std::size_t>(n)) {
    std::iota(pool_.begin(), pool_.end(), 0);
}

void SubsetSampler::sample(int s, RandomSource& rng, std::vector<int>& out) {
    const int n = size();
    if (s < 0 || s > n)
        throw std::invalid_argument("SubsetSampler: s out of range [0, n]");
    out.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool_[i], pool_[j]);
        out[static_cast<std::size_t>(i)] = pool_[i];
    }
}

BitString flip_random_bits(const BitString& x, int s, RandomSource& rng) {
    if (s < 0 || s > x.size())
        throw std::invalid_argument("flip_random_bits: s out of range [0, n]");
    SubsetSampler sampler(x.size());
    std::vector<int> pos;
    sampler.sample(s, rng, pos);
    BitString y = x;
    for (const int p : pos) y.flip(p);
    return y;
}

BitString standard_bit_mutation(const BitString& x, double p, RandomSource& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("standard_bit_mutation: p must be in [0, 1]");
    return flip_random_bits(x, rng.binomial(x.size(), p), rng);
}

}  // namespace sdfea
