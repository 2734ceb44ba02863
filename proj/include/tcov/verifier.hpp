#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <type_traits>

#include "tcov/construction.hpp"
#include "tcov/parallel.hpp"
#include "tcov/witness.hpp"

namespace tcov {

enum class VerifyMode { Full, Histogram };
enum class VerifyStrategy { Scan, Witness };

const char* mode_name(VerifyMode mode) noexcept;
const char* strategy_name(VerifyStrategy strategy) noexcept;

struct CoverageReport {
    std::uint64_t universe_size = 0;
    std::uint64_t uncovered_count = 0;
    std::optional<Block> first_uncovered;
    // present in Histogram mode only: entry i counts subsets whose best block
    // intersection is exactly i; entries sum to universe_size and the 0..2
    // entries sum to uncovered_count
    std::optional<std::array<std::uint64_t, 7>> max_intersection_histogram;
    double elapsed_seconds = 0;
    VerifyMode mode = VerifyMode::Full;
    VerifyStrategy strategy = VerifyStrategy::Scan;
    int workers_used = 1;

    bool covered() const noexcept { return uncovered_count == 0; }
};

// Checks every 6-subset of [n] against the family.
//   Full:      early exit per subset on the first block meeting it in >= 3.
//   Histogram: no early exit; tallies max_B |S ∩ B| per subset.
// Scan is family-agnostic; Witness derives the covering block from the
// family's construction parameters (build_family output only) and is O(1)
// per subset. Count fields are independent of the worker count.
CoverageReport verify_exhaustive(const CoveringFamily& family, int n,
                                 VerifyMode mode = VerifyMode::Full,
                                 VerifyStrategy strategy = VerifyStrategy::Scan,
                                 const ParallelOptions& parallel = {});

// First family block (in family order) meeting s in >= 3 elements.
std::optional<Block> covered_by(const CoveringFamily& family, Block s);

namespace detail {

template <typename Visitor>
inline bool invoke_visitor(Visitor&& visit, Block s) {
    if constexpr (std::is_void_v<std::invoke_result_t<Visitor&, Block>>) {
        visit(s);
        return true;
    } else {
        return visit(s);
    }
}

}  // namespace detail

// Visits every 6-subset S of [n] with |S ∩ b| >= 3 exactly once, grouped by
// the number of elements taken inside b (6 down to 3). A bool-returning
// visitor stops the walk by returning false.
template <typename Visitor>
void enumerate_block_neighborhood(Block b, int n, Visitor&& visit) {
    if (b.size() != kBlockSize)
        throw std::invalid_argument("tcov: neighborhood of a non-6-subset");
    if (n < kBlockSize || n > kMaxGroundSet || !b.within(n))
        throw std::out_of_range("tcov: block outside ground set [1," + std::to_string(n) + "]");

    std::array<int, kBlockSize> inside{};
    std::array<int, kMaxGroundSet> outside{};
    int out_count = 0;
    {
        int t = 0;
        std::uint64_t m = b.bits;
        while (m) {
            inside[std::size_t(t++)] = std::countr_zero(m);
            m &= m - 1;
        }
        std::uint64_t rest = full_mask(n) & ~b.bits;
        while (rest) {
            outside[std::size_t(out_count++)] = std::countr_zero(rest);
            rest &= rest - 1;
        }
    }

    auto spread = [](std::uint64_t pattern, const int* positions) {
        std::uint64_t out = 0;
        while (pattern) {
            out |= 1ull << positions[std::countr_zero(pattern)];
            pattern &= pattern - 1;
        }
        return out;
    };

    for (int in_count = kBlockSize; in_count >= 3; --in_count) {
        int need_out = kBlockSize - in_count;
        if (need_out > out_count) continue;

        // outside choices are few (at most C(58,3)); cache their masks once
        std::vector<std::uint64_t> outer_masks;
        outer_masks.reserve(detail::binom(out_count, need_out));
        if (need_out == 0) {
            outer_masks.push_back(0);
        } else {
            std::uint64_t pat = full_mask(need_out);
            std::uint64_t last = pat << (out_count - need_out);
            for (;;) {
                outer_masks.push_back(spread(pat, outside.data()));
                if (pat == last) break;
                pat = gosper_next(pat);
            }
        }

        std::uint64_t in_pat = full_mask(in_count);
        std::uint64_t in_last = in_pat << (kBlockSize - in_count);
        for (;;) {
            std::uint64_t inner = spread(in_pat, inside.data());
            for (std::uint64_t outer : outer_masks)
                if (!detail::invoke_visitor(visit, Block{inner | outer})) return;
            if (in_pat == in_last) break;
            in_pat = gosper_next(in_pat);
        }
    }
}

// Number of subsets enumerate_block_neighborhood emits (counted, not closed
// form — the closed form lives in the bounds module as its cross-check).
std::uint64_t block_neighborhood_size(Block b, int n);

}  // namespace tcov
