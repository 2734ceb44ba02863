#include "tcov/combinatorics.hpp"

#include <algorithm>

namespace tcov {

Block Block::from_elements(const std::vector<int>& elements) {
    Block b;
    for (int e : elements) {
        if (e < 1 || e > kMaxGroundSet)
            throw std::out_of_range("tcov: element " + std::to_string(e) + " outside [1,64]");
        std::uint64_t bit = 1ull << (e - 1);
        if (b.bits & bit)
            throw std::invalid_argument("tcov: duplicate element " + std::to_string(e));
        b.bits |= bit;
    }
    return b;
}

std::vector<int> Block::elements() const {
    std::vector<int> out;
    out.reserve(std::size_t(size()));
    std::uint64_t m = bits;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::string Block::str() const {
    std::string out;
    for (int e : elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("tcov: binomial requires n >= 0 and k >= 0");
    if (k > n) return 0;
    if (n > kMaxGroundSet)
        throw std::overflow_error("tcov: binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") exceeds the exact 64-bit range (n <= 64)");
    return detail::binom(n, k);
}

int intersection_size(Block a, Block b) noexcept {
    return std::popcount(a.bits & b.bits);
}

int johnson_distance(Block a, Block b) {
    if (a.size() != kBlockSize || b.size() != kBlockSize)
        throw std::invalid_argument("tcov: johnson_distance is defined on 6-subsets only");
    return kBlockSize - intersection_size(a, b);
}

SubsetRank rank_subset(Block s, int k, int n) {
    if (n < 0 || n > kMaxGroundSet)
        throw std::out_of_range("tcov: ground-set size must be in [0,64]");
    if (s.size() != k)
        throw std::invalid_argument("tcov: subset has " + std::to_string(s.size()) +
                                    " elements, expected " + std::to_string(k));
    if (!s.within(n))
        throw std::out_of_range("tcov: subset has elements outside [1," + std::to_string(n) + "]");
    return SubsetRank{colex_rank(s.bits), k, n};
}

std::uint64_t unrank_mask(std::uint64_t rank, int k, int n) noexcept {
    std::uint64_t bits = 0;
    int e = n;  // candidate element, walked downward
    for (int i = k; i >= 1; --i) {
        while (detail::binom(e - 1, i) > rank) --e;
        bits |= 1ull << (e - 1);
        rank -= detail::binom(e - 1, i);
    }
    return bits;
}

Block unrank_subset(const SubsetRank& r) {
    if (r.n < 0 || r.n > kMaxGroundSet)
        throw std::out_of_range("tcov: ground-set size must be in [0,64]");
    if (r.k < 0 || r.k > r.n)
        throw std::out_of_range("tcov: subset size must be in [0,n]");
    if (r.rank >= binomial(r.n, r.k))
        throw std::out_of_range("tcov: rank " + std::to_string(r.rank) + " out of range for C(" +
                                std::to_string(r.n) + "," + std::to_string(r.k) + ")");
    return Block{unrank_mask(r.rank, r.k, r.n)};
}

std::optional<Block> next_subset(Block s, int n) {
    if (n < 1 || n > kMaxGroundSet)
        throw std::out_of_range("tcov: ground-set size must be in [1,64]");
    if (s.empty())
        throw std::invalid_argument("tcov: next_subset requires a non-empty subset");
    if (!s.within(n))
        throw std::out_of_range("tcov: subset has elements outside [1," + std::to_string(n) + "]");
    std::uint64_t nxt = gosper_next(s.bits);
    if (nxt == 0 || (nxt & ~full_mask(n))) return std::nullopt;
    return Block{nxt};
}

Block first_subset(int k) {
    if (k < 0 || k > kMaxGroundSet)
        throw std::out_of_range("tcov: subset size must be in [0,64]");
    return Block{full_mask(k)};
}

}  // namespace tcov
