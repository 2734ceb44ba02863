#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tcov/construction.hpp"
#include "tcov/parallel.hpp"

namespace tcov {

// The covering block produced for one 6-subset, together with how it was
// chosen: the half whose majority triple was used and the three pair indices
// (ascending, 1-based within that half) whose union forms the block.
struct WitnessResult {
    Block block;
    int intersection = 0;
    Half side = Half::A;
    std::array<int, 3> pair_indices{};
};

// Deterministic covering block for any 6-subset of [4p]:
//  - pick the half holding >= 3 elements of s (ties go to A);
//  - take the three smallest elements of s in that half and the pairs they
//    lie in;
//  - if only two distinct pairs are hit, fill up with the smallest unused
//    pair index.
// The result is always a union of three distinct pairs of one half and meets
// s in at least 3 elements.
WitnessResult find_witness(Block s, const ConstructionParams& params);

// True iff b is the union of three distinct whole pairs inside one half.
// On success fills side/indices when the out-pointers are non-null.
bool is_pair_triple_block(Block b, const ConstructionParams& params, Half* side_out = nullptr,
                          std::array<int, 3>* indices_out = nullptr);

// count == 0 sweeps every 6-subset; otherwise `count` subsets drawn uniformly
// (with replacement) from a generator seeded with `seed`.
struct SampleSpec {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
};

struct WitnessSweepReport {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::optional<Block> first_failure;
    // order-independent digest over (rank, witness block); equal digests mean
    // identical witness choices on every checked subset
    std::uint64_t witness_checksum = 0;
    double elapsed_seconds = 0;
};

// Runs find_witness on every sampled 6-subset and checks intersection >= 3,
// membership of the witness in the pair families, and consistency of the
// reported intersection. Failures are report content, not errors.
WitnessSweepReport verify_witness_total(const ConstructionParams& params,
                                        const SampleSpec& sample = {},
                                        const ParallelOptions& parallel = {});

}  // namespace tcov
