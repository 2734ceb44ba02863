#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcov/verifier.hpp"

namespace tcov {

// Per-subset cover counters indexed by colex rank. A counter holds the number
// of family blocks meeting that subset in >= 3 elements, saturating at kCap;
// saturated entries are recounted exactly on demand by the pruner.
struct CoverMultiplicity {
    static constexpr std::uint8_t kCap = 255;

    int n = 0;
    std::vector<std::uint8_t> counters;  // C(n,6) entries

    std::uint64_t nonzero_count() const;
    std::optional<std::uint64_t> first_zero_rank() const;
    bool covers() const { return !first_zero_rank().has_value(); }
};

struct MemoryBudgetError : std::runtime_error {
    std::size_t required_bytes;
    std::size_t budget_bytes;
    MemoryBudgetError(std::size_t required, std::size_t budget);
};

struct NotACoverError : std::runtime_error {
    Block first_uncovered;
    explicit NotACoverError(Block first);
};

// Streams every block's neighborhood and increments the visited ranks.
// Parallel over blocks with shared saturating counters; saturating addition
// is commutative, so the result is independent of the worker count.
CoverMultiplicity build_multiplicity(const CoveringFamily& family, int n,
                                     std::size_t memory_budget_bytes = std::size_t(256) << 20,
                                     const ParallelOptions& parallel = {});

struct PruneOrder {
    enum class Kind { Given, Random };
    Kind kind = Kind::Given;
    std::uint64_t seed = 0;

    static PruneOrder given() { return {Kind::Given, 0}; }
    static PruneOrder random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct RemovalRecord {
    std::size_t index = 0;  // position in the input family
    Block block;
    BlockTag tag = BlockTag::External;
    bool duplicate = false;  // dropped by the exact-duplicate pre-pass
};

struct PruneResult {
    CoveringFamily family;
    std::vector<RemovalRecord> removed;
    std::optional<CoverageReport> verification;  // scan re-check of the result
};

// Greedy 1-minimal reduction. Entries that duplicate an earlier block are
// dropped first (always sound); the remaining candidates are visited in the
// given family order or a seeded random order, and a block is removed iff no
// subset it covers would lose its last cover. Throws NotACoverError when the
// input family does not cover [n].
PruneResult prune_redundant(const CoveringFamily& family, int n,
                            PruneOrder order = PruneOrder::given(), bool verify_result = true,
                            const ParallelOptions& parallel = {});

struct PruneSearchResult {
    PruneResult best;
    std::vector<std::size_t> restart_sizes;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// Runs prune_redundant under `restarts` random orders (seed, seed+1, ...),
// keeps the smallest result (earliest restart wins ties) and re-verifies it
// with the scan strategy. restarts == 0 returns the input unchanged.
PruneSearchResult prune_search(const CoveringFamily& family, int n, int restarts,
                               std::uint64_t seed, const ParallelOptions& parallel = {});

// Indices (into family.blocks) of blocks whose single removal keeps full
// coverage. Empty result == the family is 1-minimal. `candidates` empty
// means "check every block".
std::vector<std::size_t> removable_blocks(const CoveringFamily& family, int n,
                                          const std::vector<std::size_t>& candidates = {},
                                          const ParallelOptions& parallel = {});

}  // namespace tcov
