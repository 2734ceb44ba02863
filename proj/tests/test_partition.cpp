#include <doctest.h>

#include <algorithm>
#include <random>

#include "tcov/partition.hpp"
#include "tcov/verifier.hpp"

using namespace tcov;

namespace {

const ConstructionParams kFull60{15, true};

GroupPartition halves_55() {
    return group_elements({{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}, kFull60);
}

GroupPartition thirds_334() {
    return group_elements({{1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}}, kFull60);
}

// All (2,2,2)-distributed subsets for a 3-group partition.
template <typename F>
void for_each_balanced(const GroupPartition& grouping, F&& fn) {
    REQUIRE(grouping.group_count() == 3);
    std::array<std::vector<int>, 3> members;
    for (int g = 0; g < 3; ++g) members[std::size_t(g)] = grouping.groups[std::size_t(g)].elements();
    for (std::size_t a = 0; a < members[0].size(); ++a)
        for (std::size_t b = a + 1; b < members[0].size(); ++b)
            for (std::size_t c = 0; c < members[1].size(); ++c)
                for (std::size_t d = c + 1; d < members[1].size(); ++d)
                    for (std::size_t e = 0; e < members[2].size(); ++e)
                        for (std::size_t f = e + 1; f < members[2].size(); ++f)
                            fn(Block::from_elements({members[0][a], members[0][b], members[1][c],
                                                     members[1][d], members[2][e],
                                                     members[2][f]}));
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("distribution counts per group") {
    CHECK(distribution(Block::from_elements({1, 2, 3, 31, 32, 33}), halves_55()).counts ==
          std::vector<int>{3, 3});
    CHECK(distribution(Block::from_elements({1, 2, 19, 20, 37, 38}), thirds_334()).counts ==
          std::vector<int>{2, 2, 2});
    CHECK(distribution(Block::from_elements({1, 2, 3, 4, 5, 6}), halves_55()).counts ==
          std::vector<int>{6, 0});
}

TEST_CASE("distribution validates its input") {
    CHECK_THROWS_AS(distribution(Block::from_elements({1, 2, 3}), halves_55()),
                    std::invalid_argument);
    CHECK_THROWS_AS(distribution(Block::from_elements({1, 2, 3, 4, 5, 61}), halves_55()),
                    std::out_of_range);
}

TEST_CASE("half/half pigeonhole: exhaustive at n = 12") {
    PigeonholeReport rep = check_pigeonhole_55(12);
    CHECK(rep.checked == 924);
    CHECK(rep.violations == 0);
    CHECK(rep.analytic_bound == 3);
    // boundary (3,3) splits exist and are counted
    CHECK(rep.boundary_33 == 400);  // C(6,3) * C(6,3)
}

TEST_CASE("half/half pigeonhole: sampled at n = 60") {
    PigeonholeReport rep = check_pigeonhole_55(60, SampleSpec{1000000, 1});
    CHECK(rep.checked == 1000000);
    CHECK(rep.violations == 0);
}

TEST_CASE("two-group distributions always put a triple somewhere (n = 12)") {
    GroupPartition halves = group_elements({{1}, {2}}, ConstructionParams{3, true});
    std::uint64_t mask = full_mask(6);
    for (std::uint64_t r = 0; r < 924; ++r, mask = gosper_next(mask)) {
        DistributionProfile prof = distribution(Block{mask}, halves);
        REQUIRE(prof.max_count() >= 3);
    }
}

TEST_CASE("within-group intersection for the balanced subset is at most 2") {
    Block s = Block::from_elements({1, 2, 19, 20, 37, 38});
    CHECK(max_within_group_intersection(s, thirds_334(), kFull60) == 2);
}

TEST_CASE("subset inside one group is fully recoverable there") {
    CHECK(max_within_group_intersection(Block::from_elements({1, 2, 3, 4, 5, 6}), thirds_334(),
                                        kFull60) == 6);
}

TEST_CASE("the (5,5) split does force a triple for the balanced subset") {
    Block s = Block::from_elements({1, 2, 19, 20, 37, 38});
    CHECK(max_within_group_intersection(s, halves_55(), kFull60) >= 3);
    // the constructive witness finds such a block too
    WitnessResult w = find_witness(s, kFull60);
    CHECK(w.intersection >= 3);
}

TEST_CASE("balanced obstruction subsets") {
    Block s = find_balanced_obstruction(thirds_334());
    CHECK(s == Block::from_elements({1, 2, 19, 20, 37, 38}));
    CHECK(distribution(s, thirds_334()).counts == std::vector<int>{2, 2, 2});

    GroupPartition skew = group_elements({{1}, {2}, {3, 4, 5, 6, 7, 8, 9, 10}}, kFull60);
    CHECK(find_balanced_obstruction(skew) == Block::from_elements({1, 2, 7, 8, 13, 14}));

    CHECK_THROWS_AS(find_balanced_obstruction(halves_55()), std::invalid_argument);

    GroupPartition tiny;  // malformed by hand: a group with one element
    tiny.n = 60;
    tiny.groups = {Block::from_elements({1}), Block::from_elements({2, 3}),
                   Block::from_elements({4, 5})};
    CHECK_THROWS_AS(find_balanced_obstruction(tiny), std::invalid_argument);
}

TEST_CASE("obstruction subsets are still covered by the full family") {
    CoveringFamily fam = build_family(kFull60);
    for (const GroupPartition& grouping :
         {thirds_334(), group_elements({{1}, {2}, {3, 4, 5, 6, 7, 8, 9, 10}}, kFull60)}) {
        Block s = find_balanced_obstruction(grouping);
        CHECK(covered_by(fam, s).has_value());
    }
}

TEST_CASE("exhaustive balanced-subset bound at the smallest 3-group scale (n = 24)") {
    ConstructionParams params{6, true};
    GroupPartition grouping = group_elements({{1}, {2}, {3, 4}}, params);
    CoveringFamily fam = build_family(params);

    std::uint64_t checked = 0;
    for_each_balanced(grouping, [&](Block s) {
        ++checked;
        REQUIRE(distribution(s, grouping).counts == std::vector<int>{2, 2, 2});
        REQUIRE(max_within_group_intersection(s, grouping, params) <= 2);
        REQUIRE(covered_by(fam, s).has_value());
    });
    // C(6,2) * C(6,2) * C(12,2)
    CHECK(checked == 15 * 15 * 66);
}

TEST_CASE("sampled balanced-subset bound at n = 60 over random 3-group partitions") {
    CoveringFamily fam = build_family(kFull60);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> base(10);
        for (int i = 0; i < 10; ++i) base[std::size_t(i)] = i + 1;
        std::shuffle(base.begin(), base.end(), rng);
        std::uniform_int_distribution<int> cut1(1, 8);
        int c1 = cut1(rng);
        std::uniform_int_distribution<int> cut2(c1 + 1, 9);
        int c2 = cut2(rng);
        GroupPartition grouping = group_elements(
            {std::vector<int>(base.begin(), base.begin() + c1),
             std::vector<int>(base.begin() + c1, base.begin() + c2),
             std::vector<int>(base.begin() + c2, base.end())},
            kFull60);

        for (int s_trial = 0; s_trial < 25; ++s_trial) {
            std::vector<int> elems;
            for (Block g : grouping.groups) {
                std::vector<int> members = g.elements();
                std::shuffle(members.begin(), members.end(), rng);
                elems.push_back(members[0]);
                elems.push_back(members[1]);
            }
            std::sort(elems.begin(), elems.end());
            Block s = Block::from_elements(elems);
            REQUIRE(max_within_group_intersection(s, grouping, kFull60) <= 2);
            REQUIRE(covered_by(fam, s).has_value());
        }
    }
}

TEST_CASE("groups smaller than three pairs contribute nothing") {
    // every group of one base block has exactly 3 pairs; check a subset whose
    // triple-holding group is elsewhere
    GroupPartition grouping = group_elements({{1}, {2}, {3, 4, 5, 6, 7, 8, 9, 10}}, kFull60);
    Block s = Block::from_elements({1, 2, 7, 8, 13, 14});
    int max_isect = max_within_group_intersection(s, grouping, kFull60);
    CHECK(max_isect == 2);
}

}  // TEST_SUITE
