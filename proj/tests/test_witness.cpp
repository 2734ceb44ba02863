#include <doctest.h>

#include <random>

#include "tcov/witness.hpp"

using namespace tcov;

namespace {
const ConstructionParams kFull60{15, true};
const ConstructionParams kSmall{3, false};
}  // namespace

TEST_SUITE("witness") {

TEST_CASE("subset equal to a pair-triple block is its own witness") {
    WitnessResult w = find_witness(Block::from_elements({1, 2, 3, 4, 5, 6}), kFull60);
    CHECK(w.block == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(w.intersection == 6);
    CHECK(w.side == Half::A);
    CHECK(w.pair_indices == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("distinct-pair branch: three odd elements of the A half") {
    WitnessResult w = find_witness(Block::from_elements({1, 3, 5, 31, 33, 35}), kFull60);
    CHECK(w.side == Half::A);
    CHECK(w.pair_indices == std::array<int, 3>{1, 2, 3});
    CHECK(w.block == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(w.intersection == 3);
}

TEST_CASE("coincident-pair branch fills in the smallest unused pair") {
    // elements 1,2,3 lie in pairs 1,1,2; the filler is pair 3
    WitnessResult w = find_witness(Block::from_elements({1, 2, 3, 40, 41, 42}), kFull60);
    CHECK(w.side == Half::A);  // |S_A| = |S_C| = 3 ties toward A
    CHECK(w.pair_indices == std::array<int, 3>{1, 2, 3});
    CHECK(w.block == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(w.intersection == 3);
}

TEST_CASE("coincident-pair branch skips pair indices already in use") {
    // elements 1,2,3 in pairs 1,1,2 would normally pull in pair 3; check the
    // filler skips occupied indices when the coincident pairs are 2,2,3
    WitnessResult w = find_witness(Block::from_elements({3, 4, 5, 40, 41, 42}), kFull60);
    CHECK(w.side == Half::A);
    CHECK(w.pair_indices == std::array<int, 3>{1, 2, 3});
    CHECK(w.intersection == 3);
}

TEST_CASE("C-side majority uses the C pairs") {
    WitnessResult w = find_witness(Block::from_elements({1, 2, 37, 39, 41, 43}), kFull60);
    CHECK(w.side == Half::C);
    // 37,39,41 lie in C pairs 4,5,6
    CHECK(w.pair_indices == std::array<int, 3>{4, 5, 6});
    CHECK(w.block == Block::from_elements({37, 38, 39, 40, 41, 42}));
    CHECK(w.intersection == 3);
}

TEST_CASE("witness at the small scale") {
    WitnessResult w = find_witness(Block::from_elements({7, 8, 9, 10, 11, 12}), kSmall);
    CHECK(w.side == Half::C);
    CHECK(w.block == Block::from_elements({7, 8, 9, 10, 11, 12}));
    CHECK(w.intersection == 6);
}

TEST_CASE("witness rejects wrong-size or out-of-range input") {
    CHECK_THROWS_AS(find_witness(Block::from_elements({1, 2, 3}), kFull60), std::invalid_argument);
    CHECK_THROWS_AS(find_witness(Block::from_elements({1, 2, 3, 4, 5, 61}), kFull60),
                    std::out_of_range);
}

TEST_CASE("pair-triple membership test") {
    CHECK(is_pair_triple_block(Block::from_elements({1, 2, 3, 4, 5, 6}), kFull60));
    CHECK(is_pair_triple_block(Block::from_elements({31, 32, 35, 36, 59, 60}), kFull60));
    // straddles the halves
    CHECK_FALSE(is_pair_triple_block(Block::from_elements({1, 2, 3, 4, 31, 32}), kFull60));
    // breaks a pair
    CHECK_FALSE(is_pair_triple_block(Block::from_elements({1, 2, 3, 4, 5, 7}), kFull60));
    CHECK_FALSE(is_pair_triple_block(Block::from_elements({1, 2, 3, 4, 5}), kFull60));

    Half side;
    std::array<int, 3> idx;
    REQUIRE(is_pair_triple_block(Block::from_elements({33, 34, 37, 38, 41, 42}), kFull60, &side,
                                 &idx));
    CHECK(side == Half::C);
    CHECK(idx == std::array<int, 3>{2, 4, 6});
}

TEST_CASE("witness is total over the whole small instance") {
    WitnessSweepReport rep = verify_witness_total(kSmall);
    CHECK(rep.checked == 924);
    CHECK(rep.failures == 0);
    CHECK_FALSE(rep.first_failure.has_value());
}

TEST_CASE("witness checks out on a large random sample at full scale") {
    WitnessSweepReport rep = verify_witness_total(kFull60, SampleSpec{1000000, 42});
    CHECK(rep.checked == 1000000);
    CHECK(rep.failures == 0);
}

TEST_CASE("witness sweep is deterministic and worker-count independent") {
    WitnessSweepReport a = verify_witness_total(kSmall, {}, ParallelOptions{1, 64});
    WitnessSweepReport b = verify_witness_total(kSmall, {}, ParallelOptions{4, 64});
    WitnessSweepReport c = verify_witness_total(kSmall, {}, ParallelOptions{4, 64});
    CHECK(a.checked == b.checked);
    CHECK(a.failures == b.failures);
    CHECK(a.witness_checksum == b.witness_checksum);
    CHECK(b.witness_checksum == c.witness_checksum);

    WitnessSweepReport s1 = verify_witness_total(kFull60, SampleSpec{5000, 9}, ParallelOptions{1, 128});
    WitnessSweepReport s2 = verify_witness_total(kFull60, SampleSpec{5000, 9}, ParallelOptions{3, 128});
    CHECK(s1.witness_checksum == s2.witness_checksum);
    CHECK(s1.failures == 0);
}

TEST_CASE("witness intersection is consistent and the block is in the pair families") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(0, binomial(60, 6) - 1);
    for (int t = 0; t < 50000; ++t) {
        Block s = unrank_subset({dist(rng), 6, 60});
        WitnessResult w = find_witness(s, kFull60);
        REQUIRE(w.intersection >= 3);
        REQUIRE(w.intersection == intersection_size(s, w.block));
        REQUIRE(is_pair_triple_block(w.block, kFull60));
        // determinism: recompute equals
        WitnessResult again = find_witness(s, kFull60);
        REQUIRE(again.block == w.block);
        REQUIRE(again.side == w.side);
        REQUIRE(again.pair_indices == w.pair_indices);
    }
}

}  // TEST_SUITE
