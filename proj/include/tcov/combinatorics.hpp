#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcov {

inline constexpr int kMaxGroundSet = 64;  // one element per bit of a 64-bit mask
inline constexpr int kBlockSize = 6;

namespace detail {

// Pascal's triangle for 0 <= k <= n <= 64, built in signed 64-bit arithmetic so
// that a wrap during constexpr evaluation is a compile error. The largest entry,
// C(64,32) ~ 1.8e18, fits comfortably in int64_t.
constexpr std::array<std::array<std::int64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1>
make_binomial_table() {
    std::array<std::array<std::int64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1> t{};
    for (int n = 0; n <= kMaxGroundSet; ++n) {
        t[std::size_t(n)][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[std::size_t(n)][std::size_t(k)] =
                t[std::size_t(n - 1)][std::size_t(k - 1)] + t[std::size_t(n - 1)][std::size_t(k)];
    }
    return t;
}

inline constexpr auto kBinomialTable = make_binomial_table();

// Unchecked table lookup; valid for 0 <= n <= 64.
inline std::uint64_t binom(int n, int k) noexcept {
    return (k < 0 || k > n) ? 0u
                            : static_cast<std::uint64_t>(kBinomialTable[std::size_t(n)][std::size_t(k)]);
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("tcov: 64-bit addition overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("tcov: 64-bit multiplication overflow");
    return r;
}

// ceil(a / b) in exact integer arithmetic; b > 0.
inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw std::invalid_argument("tcov: ceil_div by zero");
    if (a == 0) return 0;
    return (checked_add(a, b - 1)) / b;
}

}  // namespace detail

inline std::uint64_t full_mask(int n) noexcept {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}

// A subset of the ground set [n], element e (1-based) stored at bit e-1.
struct Block {
    std::uint64_t bits = 0;

    static Block from_elements(const std::vector<int>& elements);

    int size() const noexcept { return std::popcount(bits); }
    bool empty() const noexcept { return bits == 0; }
    bool contains(int element) const noexcept {
        return element >= 1 && element <= 64 && (bits >> (element - 1)) & 1u;
    }
    bool within(int n) const noexcept { return (bits & ~full_mask(n)) == 0; }

    std::vector<int> elements() const;  // ascending, 1-based
    std::string str() const;            // "1 2 3 4 5 6"

    friend constexpr Block operator&(Block a, Block b) noexcept { return Block{a.bits & b.bits}; }
    friend constexpr Block operator|(Block a, Block b) noexcept { return Block{a.bits | b.bits}; }
    friend constexpr bool operator==(Block a, Block b) noexcept { return a.bits == b.bits; }
    // mask order on same-size subsets == colexicographic order
    friend constexpr bool operator<(Block a, Block b) noexcept { return a.bits < b.bits; }
};

// Identifies a k-subset of [n] by its colexicographic index.
struct SubsetRank {
    std::uint64_t rank = 0;
    int k = 0;
    int n = 0;
};

// Exact C(n,k); 0 when k > n. Throws std::invalid_argument for negative
// arguments and std::overflow_error when n exceeds the exact 64-bit range.
std::uint64_t binomial(int n, int k);

int intersection_size(Block a, Block b) noexcept;

// 6 - |a ∩ b| for two 6-subsets; throws if either block is not a 6-subset.
int johnson_distance(Block a, Block b);

// Colexicographic rank: sum over the i-th smallest element e_i of C(e_i - 1, i).
SubsetRank rank_subset(Block s, int k, int n);

// Inverse of rank_subset.
Block unrank_subset(const SubsetRank& r);

// Successor of s among same-size subsets of [n] in colexicographic (= ascending
// mask) order; nullopt when s is the last such subset.
std::optional<Block> next_subset(Block s, int n);

// First k-subset in colex order: {1, ..., k}.
Block first_subset(int k);

// ---- unchecked hot-path primitives ------------------------------------

// Colex rank of a nonzero mask; no validation.
inline std::uint64_t colex_rank(std::uint64_t mask) noexcept {
    std::uint64_t r = 0;
    int i = 0;
    while (mask) {
        int pos = std::countr_zero(mask);
        mask &= mask - 1;
        r += detail::binom(pos, ++i);
    }
    return r;
}

// Next same-popcount mask in ascending numeric order (Gosper). The caller is
// responsible for stopping before the result leaves the ground set; a result
// of 0 signals 64-bit wraparound.
inline std::uint64_t gosper_next(std::uint64_t mask) noexcept {
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    if (r < mask) return 0;  // overflowed past bit 63
    return r | (((mask ^ r) >> 2) / c);
}

// Mask form of unrank_subset; no validation beyond the combinadic walk.
std::uint64_t unrank_mask(std::uint64_t rank, int k, int n) noexcept;

}  // namespace tcov
