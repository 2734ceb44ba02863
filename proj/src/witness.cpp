#include "tcov/witness.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace tcov {

namespace {

// Pair index (1-based within the half) of a 0-based bit position.
inline int pair_index_of(int pos, int half_offset) noexcept {
    return (pos - half_offset) / 2 + 1;
}

inline std::uint64_t pair_mask(int index, int half_offset) noexcept {
    return 0x3ull << (half_offset + 2 * (index - 1));
}

}  // namespace

WitnessResult find_witness(Block s, const ConstructionParams& params) {
    params.validate();
    int n = params.ground_set_size();
    if (s.size() != kBlockSize)
        throw std::invalid_argument("tcov: find_witness requires a 6-subset, got size " +
                                    std::to_string(s.size()));
    if (!s.within(n))
        throw std::out_of_range("tcov: subset has elements outside [1," + std::to_string(n) + "]");

    int p = params.pairs_per_half;
    int half = params.half_size();
    std::uint64_t a_mask = full_mask(half);
    std::uint64_t side_a = s.bits & a_mask;

    // |S_A| + |S_C| = 6, so one side holds at least 3; ties go to A.
    bool use_a = std::popcount(side_a) >= 3;
    std::uint64_t side_bits = use_a ? side_a : (s.bits & ~a_mask);
    int offset = use_a ? 0 : half;

    // pairs of the three smallest elements on the majority side
    std::array<int, 3> idx{};
    std::uint64_t m = side_bits;
    for (int t = 0; t < 3; ++t) {
        idx[std::size_t(t)] = pair_index_of(std::countr_zero(m), offset);
        m &= m - 1;
    }

    // Distinct elements can share at most one pair between them, so at least
    // two distinct pair indices always survive.
    std::array<int, 3> uniq = idx;
    std::sort(uniq.begin(), uniq.end());
    int distinct = int(std::unique(uniq.begin(), uniq.end()) - uniq.begin());
    if (distinct == 2) {
        int filler = 1;
        while (filler == uniq[0] || filler == uniq[1]) ++filler;
        uniq[2] = filler;
        std::sort(uniq.begin(), uniq.begin() + 3);
    }

    WitnessResult res;
    res.side = use_a ? Half::A : Half::C;
    res.pair_indices = {uniq[0], uniq[1], uniq[2]};
    res.block = Block{pair_mask(uniq[0], offset) | pair_mask(uniq[1], offset) |
                      pair_mask(uniq[2], offset)};
    res.intersection = intersection_size(s, res.block);
    return res;
}

bool is_pair_triple_block(Block b, const ConstructionParams& params, Half* side_out,
                          std::array<int, 3>* indices_out) {
    params.validate();
    if (b.size() != kBlockSize) return false;
    int half = params.half_size();
    std::uint64_t a_mask = full_mask(half);
    std::uint64_t c_mask = full_mask(params.ground_set_size()) & ~a_mask;

    Half side;
    int offset;
    if ((b.bits & ~a_mask) == 0) {
        side = Half::A;
        offset = 0;
    } else if ((b.bits & ~c_mask) == 0) {
        side = Half::C;
        offset = half;
    } else {
        return false;
    }

    std::array<int, 3> indices{};
    int found = 0;
    std::uint64_t m = b.bits;
    while (m) {
        int pos = std::countr_zero(m);
        int index = pair_index_of(pos, offset);
        if ((b.bits & pair_mask(index, offset)) != pair_mask(index, offset)) return false;
        if (found == 3) return false;
        indices[std::size_t(found++)] = index;
        m &= ~pair_mask(index, offset);
    }
    if (found != 3) return false;
    if (side_out) *side_out = side;
    if (indices_out) *indices_out = indices;
    return true;
}

WitnessSweepReport verify_witness_total(const ConstructionParams& params, const SampleSpec& sample,
                                        const ParallelOptions& parallel) {
    params.validate();
    int n = params.ground_set_size();
    std::uint64_t universe = binomial(n, kBlockSize);

    struct State {
        std::uint64_t checked = 0;
        std::uint64_t failures = 0;
        std::uint64_t first_failure_rank = ~0ull;
        std::uint64_t checksum = 0;
    };

    auto check_one = [&](State& st, std::uint64_t rank, std::uint64_t mask) {
        Block s{mask};
        WitnessResult w = find_witness(s, params);
        bool ok = w.intersection >= 3 && intersection_size(s, w.block) == w.intersection &&
                  is_pair_triple_block(w.block, params);
        ++st.checked;
        if (!ok) {
            ++st.failures;
            st.first_failure_rank = std::min(st.first_failure_rank, rank);
        }
        st.checksum += mix64(mix64(rank) ^ w.block.bits);
    };

    auto started = std::chrono::steady_clock::now();
    std::vector<State> states;
    if (sample.count == 0) {
        states = for_each_chunk<State>(universe, parallel,
                                       [&](State& st, std::uint64_t lo, std::uint64_t hi) {
                                           std::uint64_t mask = unrank_mask(lo, kBlockSize, n);
                                           for (std::uint64_t r = lo; r < hi; ++r) {
                                               check_one(st, r, mask);
                                               mask = gosper_next(mask);
                                           }
                                       });
    } else {
        // sampled ranks are drawn up front so the checked set is a pure
        // function of the seed, independent of worker count
        std::vector<std::uint64_t> ranks(sample.count);
        std::mt19937_64 rng(sample.seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, universe - 1);
        for (auto& r : ranks) r = dist(rng);
        states = for_each_chunk<State>(ranks.size(), parallel,
                                       [&](State& st, std::uint64_t lo, std::uint64_t hi) {
                                           for (std::uint64_t i = lo; i < hi; ++i)
                                               check_one(st, ranks[i],
                                                         unrank_mask(ranks[i], kBlockSize, n));
                                       });
    }

    WitnessSweepReport rep;
    std::uint64_t first = ~0ull;
    for (const State& st : states) {
        rep.checked += st.checked;
        rep.failures += st.failures;
        rep.witness_checksum += st.checksum;
        first = std::min(first, st.first_failure_rank);
    }
    if (first != ~0ull) rep.first_failure = Block{unrank_mask(first, kBlockSize, n)};
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

}  // namespace tcov
