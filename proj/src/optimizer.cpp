#include "tcov/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <numeric>
#include <random>
#include <unordered_map>

namespace tcov {

std::uint64_t CoverMultiplicity::nonzero_count() const {
    std::uint64_t c = 0;
    for (std::uint8_t v : counters) c += v != 0;
    return c;
}

std::optional<std::uint64_t> CoverMultiplicity::first_zero_rank() const {
    for (std::size_t i = 0; i < counters.size(); ++i)
        if (counters[i] == 0) return std::uint64_t(i);
    return std::nullopt;
}

MemoryBudgetError::MemoryBudgetError(std::size_t required, std::size_t budget)
    : std::runtime_error("tcov: multiplicity table needs " + std::to_string(required) +
                         " bytes, budget is " + std::to_string(budget)),
      required_bytes(required),
      budget_bytes(budget) {}

NotACoverError::NotACoverError(Block first)
    : std::runtime_error("tcov: input family does not cover; first uncovered subset {" +
                         first.str() + "}"),
      first_uncovered(first) {}

CoverMultiplicity build_multiplicity(const CoveringFamily& family, int n,
                                     std::size_t memory_budget_bytes,
                                     const ParallelOptions& parallel) {
    if (n < kBlockSize || n > kMaxGroundSet)
        throw std::out_of_range("tcov: multiplicity ground set must be in [6,64]");
    family.validate();
    for (Block b : family.blocks)
        if (!b.within(n))
            throw std::invalid_argument("tcov: family block outside [1," + std::to_string(n) + "]");

    std::uint64_t universe = binomial(n, kBlockSize);
    if (universe > memory_budget_bytes)
        throw MemoryBudgetError(std::size_t(universe), memory_budget_bytes);

    auto shared = std::make_unique<std::atomic<std::uint8_t>[]>(universe);
    for (std::uint64_t i = 0; i < universe; ++i)
        shared[i].store(0, std::memory_order_relaxed);

    ParallelOptions per_block = parallel;
    per_block.chunk_size = 1;  // one block per unit of work
    struct Empty {};
    for_each_chunk<Empty>(family.blocks.size(), per_block,
                          [&](Empty&, std::uint64_t lo, std::uint64_t hi) {
                              for (std::uint64_t i = lo; i < hi; ++i) {
                                  enumerate_block_neighborhood(
                                      family.blocks[std::size_t(i)], n, [&](Block s) {
                                          auto& slot = shared[colex_rank(s.bits)];
                                          auto cur = slot.load(std::memory_order_relaxed);
                                          while (cur < CoverMultiplicity::kCap &&
                                                 !slot.compare_exchange_weak(
                                                     cur, std::uint8_t(cur + 1),
                                                     std::memory_order_relaxed)) {
                                          }
                                      });
                              }
                          });

    CoverMultiplicity mult;
    mult.n = n;
    mult.counters.resize(universe);
    for (std::uint64_t i = 0; i < universe; ++i)
        mult.counters[std::size_t(i)] = shared[i].load(std::memory_order_relaxed);
    return mult;
}

namespace {

// Exact number of alive blocks meeting s in >= 3 elements.
std::size_t recount(const std::vector<std::uint64_t>& masks, const std::vector<char>& alive,
                    std::uint64_t s) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
        c += alive[i] && std::popcount(masks[i] & s) >= 3;
    return c;
}

// A block may go iff no subset in its neighborhood would drop to zero covers.
// Saturated counters are recounted exactly (and unsaturated when possible)
// before the decision relies on them.
bool block_is_removable(const CoveringFamily& family, int n, std::size_t idx,
                        std::vector<std::uint8_t>& counters,
                        const std::vector<std::uint64_t>& masks, const std::vector<char>& alive) {
    bool removable = true;
    enumerate_block_neighborhood(family.blocks[idx], n, [&](Block s) {
        std::uint64_t r = colex_rank(s.bits);
        std::size_t c = counters[std::size_t(r)];
        if (c == CoverMultiplicity::kCap) {
            c = recount(masks, alive, s.bits);
            if (c < CoverMultiplicity::kCap) counters[std::size_t(r)] = std::uint8_t(c);
        }
        if (c <= 1) {
            removable = false;
            return false;  // stop the walk
        }
        return true;
    });
    return removable;
}

void apply_removal(const CoveringFamily& family, int n, std::size_t idx,
                   std::vector<std::uint8_t>& counters, std::vector<char>& alive) {
    alive[idx] = 0;
    enumerate_block_neighborhood(family.blocks[idx], n, [&](Block s) {
        auto& c = counters[std::size_t(colex_rank(s.bits))];
        if (c < CoverMultiplicity::kCap) --c;  // saturated entries stay "unknown"
    });
}

}  // namespace

PruneResult prune_redundant(const CoveringFamily& family, int n, PruneOrder order,
                            bool verify_result, const ParallelOptions& parallel) {
    CoverMultiplicity mult = build_multiplicity(family, n, std::size_t(256) << 20, parallel);
    if (auto zero = mult.first_zero_rank())
        throw NotACoverError(Block{unrank_mask(*zero, kBlockSize, n)});

    std::vector<std::uint8_t>& counters = mult.counters;
    std::vector<std::uint64_t> masks;
    masks.reserve(family.blocks.size());
    for (Block b : family.blocks) masks.push_back(b.bits);
    std::vector<char> alive(family.blocks.size(), 1);

    PruneResult result;

    // exact duplicates of an earlier entry can never be essential while the
    // earlier copy is alive; drop them before anything else
    std::vector<std::size_t> dup_indices;
    {
        std::unordered_map<std::uint64_t, std::size_t> first_seen;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (!first_seen.emplace(masks[i], i).second) dup_indices.push_back(i);
        }
    }
    for (std::size_t idx : dup_indices) {
        if (!block_is_removable(family, n, idx, counters, masks, alive)) continue;
        apply_removal(family, n, idx, counters, alive);
        result.removed.push_back({idx, family.blocks[idx], family.tags[idx], true});
    }

    std::vector<std::size_t> candidates;
    candidates.reserve(family.blocks.size());
    for (std::size_t i = 0; i < family.blocks.size(); ++i)
        if (alive[i]) candidates.push_back(i);
    if (order.kind == PruneOrder::Kind::Random) {
        std::mt19937_64 rng(order.seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }

    for (std::size_t idx : candidates) {
        if (!block_is_removable(family, n, idx, counters, masks, alive)) continue;
        apply_removal(family, n, idx, counters, alive);
        result.removed.push_back({idx, family.blocks[idx], family.tags[idx], false});
    }

    result.family.n = n;
    for (std::size_t i = 0; i < family.blocks.size(); ++i) {
        if (!alive[i]) continue;
        result.family.blocks.push_back(family.blocks[i]);
        result.family.tags.push_back(family.tags[i]);
    }

    if (verify_result) {
        CoverageReport rep =
            verify_exhaustive(result.family, n, VerifyMode::Full, VerifyStrategy::Scan, parallel);
        if (!rep.covered())
            throw std::logic_error("tcov: pruned family failed re-verification");
        result.verification = rep;
    }
    return result;
}

PruneSearchResult prune_search(const CoveringFamily& family, int n, int restarts,
                               std::uint64_t seed, const ParallelOptions& parallel) {
    if (restarts < 0) throw std::invalid_argument("tcov: restarts must be >= 0");

    PruneSearchResult out;
    out.restarts = restarts;
    out.seed = seed;

    if (restarts == 0) {
        out.best.family = family;
        out.best.verification =
            verify_exhaustive(family, n, VerifyMode::Full, VerifyStrategy::Scan, parallel);
        return out;
    }

    std::optional<PruneResult> best;
    for (int r = 0; r < restarts; ++r) {
        PruneResult res = prune_redundant(family, n, PruneOrder::random(seed + std::uint64_t(r)),
                                          /*verify_result=*/false, parallel);
        out.restart_sizes.push_back(res.family.tagged_count());
        if (!best || res.family.tagged_count() < best->family.tagged_count())
            best = std::move(res);
    }

    // the emitted family gets the mandatory scan re-check
    best->verification =
        verify_exhaustive(best->family, n, VerifyMode::Full, VerifyStrategy::Scan, parallel);
    if (!best->verification->covered())
        throw std::logic_error("tcov: pruned family failed re-verification");
    out.best = std::move(*best);
    return out;
}

std::vector<std::size_t> removable_blocks(const CoveringFamily& family, int n,
                                          const std::vector<std::size_t>& candidates,
                                          const ParallelOptions& parallel) {
    CoverMultiplicity mult = build_multiplicity(family, n, std::size_t(256) << 20, parallel);
    if (auto zero = mult.first_zero_rank())
        throw NotACoverError(Block{unrank_mask(*zero, kBlockSize, n)});

    std::vector<std::uint64_t> masks;
    masks.reserve(family.blocks.size());
    for (Block b : family.blocks) masks.push_back(b.bits);
    std::vector<char> alive(family.blocks.size(), 1);

    std::vector<std::size_t> to_check = candidates;
    if (to_check.empty()) {
        to_check.resize(family.blocks.size());
        std::iota(to_check.begin(), to_check.end(), std::size_t(0));
    }

    std::vector<std::size_t> removable;
    for (std::size_t idx : to_check) {
        if (idx >= family.blocks.size())
            throw std::out_of_range("tcov: candidate index out of range");
        if (block_is_removable(family, n, idx, mult.counters, masks, alive))
            removable.push_back(idx);
    }
    return removable;
}

}  // namespace tcov
