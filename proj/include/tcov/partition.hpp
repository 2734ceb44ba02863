#pragma once

#include <cstdint>
#include <vector>

#include "tcov/construction.hpp"
#include "tcov/witness.hpp"

namespace tcov {

// Intersection counts of one 6-subset with each group of a partition.
struct DistributionProfile {
    std::vector<int> counts;  // one per group, summing to 6

    int max_count() const;
};

DistributionProfile distribution(Block s, const GroupPartition& grouping);

struct PigeonholeReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;    // subsets with both halves below 3 (none exist)
    std::uint64_t boundary_33 = 0;   // subsets split exactly (3,3)
    int analytic_bound = 0;          // ceil(6/2)
};

// Half/half split of [n] (n even): every 6-subset puts at least
// ceil(6/2) = 3 elements into one half. Exhaustive when sample.count == 0.
PigeonholeReport check_pigeonhole_55(int n, const SampleSpec& sample = {});

// Maximum of |s ∩ B| over all blocks B that are unions of three distinct
// pairs lying inside a single group. Groups with fewer than three pairs
// contribute nothing; returns 0 when no group has three pairs.
int max_within_group_intersection(Block s, const GroupPartition& grouping,
                                  const ConstructionParams& params);

// The 6-subset made of the two smallest elements of each of exactly three
// groups — distributed (2,2,2), so no group contains a triple of it.
Block find_balanced_obstruction(const GroupPartition& grouping);

}  // namespace tcov
