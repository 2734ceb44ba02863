#include "tcov/partition.hpp"

#include <algorithm>
#include <random>

namespace tcov {

int DistributionProfile::max_count() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

DistributionProfile distribution(Block s, const GroupPartition& grouping) {
    if (s.size() != kBlockSize)
        throw std::invalid_argument("tcov: distribution requires a 6-subset");
    if (!s.within(grouping.n))
        throw std::out_of_range("tcov: subset outside [1," + std::to_string(grouping.n) + "]");
    DistributionProfile prof;
    prof.counts.reserve(grouping.groups.size());
    for (Block g : grouping.groups) prof.counts.push_back(intersection_size(s, g));
    return prof;
}

PigeonholeReport check_pigeonhole_55(int n, const SampleSpec& sample) {
    if (n < kBlockSize || n > kMaxGroundSet || n % 2 != 0)
        throw std::invalid_argument("tcov: half/half split needs an even n in [6,64]");
    std::uint64_t half = full_mask(n / 2);

    PigeonholeReport rep;
    rep.analytic_bound = (kBlockSize + 1) / 2;

    auto tally = [&](std::uint64_t mask) {
        int x = std::popcount(mask & half);
        int y = kBlockSize - x;
        ++rep.checked;
        if (std::max(x, y) < 3) ++rep.violations;
        if (x == 3) ++rep.boundary_33;
    };

    std::uint64_t universe = binomial(n, kBlockSize);
    if (sample.count == 0) {
        std::uint64_t mask = full_mask(kBlockSize);
        for (std::uint64_t r = 0; r < universe; ++r, mask = gosper_next(mask)) tally(mask);
    } else {
        std::mt19937_64 rng(sample.seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, universe - 1);
        for (std::uint64_t i = 0; i < sample.count; ++i)
            tally(unrank_mask(dist(rng), kBlockSize, n));
    }
    return rep;
}

int max_within_group_intersection(Block s, const GroupPartition& grouping,
                                  const ConstructionParams& params) {
    params.validate();
    if (grouping.n != params.ground_set_size())
        throw std::invalid_argument("tcov: grouping and params disagree on the ground set");
    if (s.size() != kBlockSize)
        throw std::invalid_argument("tcov: expected a 6-subset");
    if (!s.within(grouping.n))
        throw std::out_of_range("tcov: subset outside [1," + std::to_string(grouping.n) + "]");

    // global pair t = {2t-1, 2t}; base blocks are aligned, so a pair is
    // either inside a group or disjoint from it
    int total_pairs = grouping.n / 2;
    int best = 0;
    for (Block g : grouping.groups) {
        std::vector<std::uint64_t> pairs;
        for (int t = 1; t <= total_pairs; ++t) {
            std::uint64_t pm = 0x3ull << (2 * (t - 1));
            if ((g.bits & pm) == pm)
                pairs.push_back(pm);
            else if ((g.bits & pm) != 0)
                throw std::invalid_argument("tcov: group boundary splits pair " + std::to_string(t));
        }
        std::size_t m = pairs.size();
        for (std::size_t i = 0; i + 2 < m; ++i)
            for (std::size_t j = i + 1; j + 1 < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    int isect = std::popcount(s.bits & (pairs[i] | pairs[j] | pairs[k]));
                    if (isect > best) best = isect;
                }
    }
    return best;
}

Block find_balanced_obstruction(const GroupPartition& grouping) {
    if (grouping.group_count() != 3)
        throw std::invalid_argument("tcov: balanced obstruction needs exactly 3 groups, got " +
                                    std::to_string(grouping.group_count()));
    std::uint64_t bits = 0;
    for (Block g : grouping.groups) {
        if (g.size() < 2)
            throw std::invalid_argument("tcov: a group has fewer than 2 elements");
        std::uint64_t m = g.bits;
        for (int t = 0; t < 2; ++t) {
            bits |= m & (~m + 1);
            m &= m - 1;
        }
    }
    return Block{bits};
}

}  // namespace tcov
