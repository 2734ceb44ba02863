#include "tcov/bounds.hpp"

namespace tcov {

std::uint64_t per_block_coverage(int n) {
    if (n < kBlockSize)
        throw std::invalid_argument("tcov: per-block coverage needs n >= 6, got " +
                                    std::to_string(n));
    std::uint64_t total = 0;
    for (int i = 3; i <= kBlockSize; ++i) {
        std::uint64_t term =
            detail::checked_mul(binomial(kBlockSize, i), binomial(n - kBlockSize, kBlockSize - i));
        total = detail::checked_add(total, term);
    }
    return total;
}

std::uint64_t counting_lower_bound(int n) {
    return detail::ceil_div(binomial(n, kBlockSize), per_block_coverage(n));
}

BoundsSummary bounds_summary(const ConstructionParams& params) {
    params.validate();
    CoveringFamily fam = build_family(params);

    BoundsSummary s;
    s.n = params.ground_set_size();
    s.per_block_coverage = per_block_coverage(s.n);
    s.universe = binomial(s.n, kBlockSize);
    s.lower_bound = counting_lower_bound(s.n);
    s.upper_bound_tagged = fam.tagged_count();
    s.upper_bound_distinct = fam.distinct_count();
    return s;
}

}  // namespace tcov
