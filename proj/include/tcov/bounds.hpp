#pragma once

#include <cstdint>

#include "tcov/construction.hpp"

namespace tcov {

struct BoundsSummary {
    int n = 0;
    std::uint64_t per_block_coverage = 0;       // N
    std::uint64_t universe = 0;                 // C(n,6)
    std::uint64_t lower_bound = 0;              // ceil(universe / N)
    std::uint64_t upper_bound_tagged = 0;       // constructed family, tagged entries
    std::uint64_t upper_bound_distinct = 0;     // constructed family, distinct blocks
};

// Number of 6-subsets of [n] meeting a fixed 6-block in >= 3 elements:
// sum over i = 3..6 of C(6,i) * C(n-6, 6-i). Requires n >= 6.
std::uint64_t per_block_coverage(int n);

// ceil(C(n,6) / per_block_coverage(n)), exact integer arithmetic throughout.
std::uint64_t counting_lower_bound(int n);

BoundsSummary bounds_summary(const ConstructionParams& params);

}  // namespace tcov
