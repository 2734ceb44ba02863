#include "tcov/verifier.hpp"

#include <algorithm>
#include <chrono>

namespace tcov {

const char* mode_name(VerifyMode mode) noexcept {
    return mode == VerifyMode::Full ? "full" : "histogram";
}

const char* strategy_name(VerifyStrategy strategy) noexcept {
    return strategy == VerifyStrategy::Scan ? "scan" : "witness";
}

namespace {

struct SweepState {
    std::uint64_t uncovered = 0;
    std::uint64_t first_uncovered_rank = ~0ull;
    std::array<std::uint64_t, 7> histogram{};
};

}  // namespace

CoverageReport verify_exhaustive(const CoveringFamily& family, int n, VerifyMode mode,
                                 VerifyStrategy strategy, const ParallelOptions& parallel) {
    if (n < kBlockSize || n > kMaxGroundSet)
        throw std::out_of_range("tcov: verification ground set must be in [6,64], got " +
                                std::to_string(n));
    family.validate();
    for (Block b : family.blocks)
        if (!b.within(n))
            throw std::invalid_argument("tcov: family block outside [1," + std::to_string(n) + "]");
    if (strategy == VerifyStrategy::Witness) {
        if (!family.params || family.params->ground_set_size() != n)
            throw std::invalid_argument(
                "tcov: witness strategy applies to the constructed family only");
        if (mode == VerifyMode::Histogram)
            throw std::invalid_argument(
                "tcov: witness strategy cannot produce an intersection histogram");
    }

    std::uint64_t universe = binomial(n, kBlockSize);
    // flat copy for sequential access on the hot path
    std::vector<std::uint64_t> masks;
    masks.reserve(family.blocks.size());
    for (Block b : family.blocks) masks.push_back(b.bits);

    ConstructionParams params = family.params.value_or(ConstructionParams{});

    auto started = std::chrono::steady_clock::now();
    auto states = for_each_chunk<SweepState>(
        universe, parallel, [&](SweepState& st, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t s = unrank_mask(lo, kBlockSize, n);
            for (std::uint64_t r = lo; r < hi; ++r, s = gosper_next(s)) {
                if (mode == VerifyMode::Histogram) {
                    int best = 0;
                    for (std::uint64_t bm : masks) {
                        int m = std::popcount(s & bm);
                        if (m > best) best = m;
                    }
                    ++st.histogram[std::size_t(best)];
                    if (best < 3) {
                        ++st.uncovered;
                        st.first_uncovered_rank = std::min(st.first_uncovered_rank, r);
                    }
                } else if (strategy == VerifyStrategy::Witness) {
                    WitnessResult w = find_witness(Block{s}, params);
                    if (w.intersection < 3 || !is_pair_triple_block(w.block, params)) {
                        ++st.uncovered;
                        st.first_uncovered_rank = std::min(st.first_uncovered_rank, r);
                    }
                } else {
                    bool covered = false;
                    for (std::uint64_t bm : masks) {
                        if (std::popcount(s & bm) >= 3) {
                            covered = true;
                            break;
                        }
                    }
                    if (!covered) {
                        ++st.uncovered;
                        st.first_uncovered_rank = std::min(st.first_uncovered_rank, r);
                    }
                }
            }
        });

    CoverageReport rep;
    rep.universe_size = universe;
    rep.mode = mode;
    rep.strategy = strategy;
    rep.workers_used = parallel.resolved_workers(universe);
    std::uint64_t first = ~0ull;
    std::array<std::uint64_t, 7> hist{};
    for (const SweepState& st : states) {
        rep.uncovered_count += st.uncovered;
        first = std::min(first, st.first_uncovered_rank);
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += st.histogram[i];
    }
    if (first != ~0ull) rep.first_uncovered = Block{unrank_mask(first, kBlockSize, n)};
    if (mode == VerifyMode::Histogram) rep.max_intersection_histogram = hist;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

std::optional<Block> covered_by(const CoveringFamily& family, Block s) {
    if (s.size() != kBlockSize)
        throw std::invalid_argument("tcov: covered_by requires a 6-subset");
    for (Block b : family.blocks)
        if (intersection_size(s, b) >= 3) return b;
    return std::nullopt;
}

std::uint64_t block_neighborhood_size(Block b, int n) {
    std::uint64_t count = 0;
    enumerate_block_neighborhood(b, n, [&](Block) { ++count; });
    return count;
}

}  // namespace tcov
