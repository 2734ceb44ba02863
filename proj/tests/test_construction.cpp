#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "tcov/construction.hpp"

using namespace tcov;

namespace {
const ConstructionParams kFull60{15, true};
const ConstructionParams kSmall{3, true};
const ConstructionParams kSmallNoBase{3, false};
}  // namespace

TEST_SUITE("construction") {

TEST_CASE("params validation") {
    CHECK_NOTHROW(kFull60.validate());
    CHECK_NOTHROW((ConstructionParams{16, false}.validate()));  // n = 64
    CHECK_THROWS_AS((ConstructionParams{2, false}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ConstructionParams{17, false}.validate()), std::invalid_argument);
    // base blocks only exist when 6 | 4p
    CHECK_THROWS_AS((ConstructionParams{4, true}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ConstructionParams{4, false}.validate()));
}

TEST_CASE("make_pair matches the pair formulas") {
    CHECK(make_pair(1, Half::A, kFull60) == Block::from_elements({1, 2}));
    CHECK(make_pair(1, Half::C, kFull60) == Block::from_elements({31, 32}));
    CHECK(make_pair(15, Half::A, kFull60) == Block::from_elements({29, 30}));
    CHECK(make_pair(15, Half::C, kFull60) == Block::from_elements({59, 60}));
    CHECK_THROWS_AS(make_pair(0, Half::A, kFull60), std::out_of_range);
    CHECK_THROWS_AS(make_pair(16, Half::A, kFull60), std::out_of_range);
}

TEST_CASE("pair family counts, first blocks, and half containment") {
    auto a = build_pair_family(Half::A, kFull60);
    auto c = build_pair_family(Half::C, kFull60);
    REQUIRE(a.size() == 455);
    REQUIRE(c.size() == 455);
    CHECK(a.front() == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(c.front() == Block::from_elements({31, 32, 33, 34, 35, 36}));

    std::uint64_t a_half = full_mask(30);
    for (Block b : a) {
        REQUIRE(b.size() == 6);
        REQUIRE((b.bits & ~a_half) == 0);
    }
    for (Block b : c) {
        REQUIRE(b.size() == 6);
        REQUIRE((b.bits & a_half) == 0);
    }

    // pairwise distinct within and across halves
    std::set<std::uint64_t> all;
    for (Block b : a) REQUIRE(all.insert(b.bits).second);
    for (Block b : c) REQUIRE(all.insert(b.bits).second);

    auto tiny = build_pair_family(Half::A, kSmallNoBase);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny.front() == Block::from_elements({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("pair family is ordered by lexicographic index triples") {
    auto a = build_pair_family(Half::A, kFull60);
    // (1,2,3) first, (1,2,4) second, (13,14,15) last
    CHECK(a[0] == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(a[1] == Block::from_elements({1, 2, 3, 4, 7, 8}));
    CHECK(a.back() == Block::from_elements({25, 26, 27, 28, 29, 30}));
}

TEST_CASE("base blocks") {
    auto base = build_base_blocks(kFull60);
    REQUIRE(base.size() == 10);
    CHECK(base[2] == Block::from_elements({13, 14, 15, 16, 17, 18}));
    CHECK(base[9] == Block::from_elements({55, 56, 57, 58, 59, 60}));

    auto small = build_base_blocks(kSmall);
    REQUIRE(small.size() == 2);
    CHECK(small[0] == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(small[1] == Block::from_elements({7, 8, 9, 10, 11, 12}));

    CHECK_THROWS_AS(build_base_blocks(ConstructionParams{4, false}), std::invalid_argument);
}

TEST_CASE("full family counts: tagged 920, distinct 910") {
    CoveringFamily fam = build_family(kFull60);
    CHECK(fam.n == 60);
    CHECK(fam.tagged_count() == 920);
    CHECK(fam.count_tag(BlockTag::PairA) == 455);
    CHECK(fam.count_tag(BlockTag::PairC) == 455);
    CHECK(fam.count_tag(BlockTag::Base) == 10);
    CHECK(fam.distinct_count() == 910);
    CHECK_NOTHROW(fam.validate());

    // every base block coincides with the union of its three internal pairs
    auto base = build_base_blocks(kFull60);
    std::set<std::uint64_t> pair_blocks;
    for (Block b : build_pair_family(Half::A, kFull60)) pair_blocks.insert(b.bits);
    for (Block b : build_pair_family(Half::C, kFull60)) pair_blocks.insert(b.bits);
    for (Block g : base) CHECK(pair_blocks.count(g.bits) == 1);
}

TEST_CASE("family variants") {
    CHECK(build_family({15, false}).tagged_count() == 910);
    CHECK(build_family({15, false}).distinct_count() == 910);

    CoveringFamily small = build_family(kSmallNoBase);
    REQUIRE(small.tagged_count() == 2);
    CHECK(small.blocks[0] == Block::from_elements({1, 2, 3, 4, 5, 6}));
    CHECK(small.blocks[1] == Block::from_elements({7, 8, 9, 10, 11, 12}));

    CoveringFamily small_base = build_family(kSmall);
    CHECK(small_base.tagged_count() == 4);
    CHECK(small_base.distinct_count() == 2);
}

TEST_CASE("construction is deterministic") {
    CoveringFamily a = build_family(kFull60);
    CoveringFamily b = build_family(kFull60);
    REQUIRE(a.blocks.size() == b.blocks.size());
    CHECK(std::equal(a.blocks.begin(), a.blocks.end(), b.blocks.begin()));
    CHECK(a.tags == b.tags);

    std::ostringstream sa, sb;
    save_family(a, sa);
    save_family(b, sb);
    CHECK(sa.str() == sb.str());  // byte-identical output
}

TEST_CASE("group_elements builds element-level partitions") {
    GroupPartition halves = group_elements({{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}, kFull60);
    REQUIRE(halves.group_count() == 2);
    CHECK(halves.groups[0].bits == full_mask(30));
    CHECK(halves.groups[1].bits == (full_mask(60) & ~full_mask(30)));
    CHECK(halves.sizes_in_base_blocks() == std::vector<int>{5, 5});

    GroupPartition thirds = group_elements({{1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}}, kFull60);
    CHECK(thirds.sizes_in_elements() == std::vector<int>{18, 18, 24});

    GroupPartition one = group_elements({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, kFull60);
    CHECK(one.groups[0].bits == full_mask(60));
}

TEST_CASE("group_elements rejects bad index sets") {
    CHECK_THROWS_AS(group_elements({{1, 2}, {2, 3, 4, 5, 6, 7, 8, 9, 10}}, kFull60),
                    std::invalid_argument);  // overlap
    CHECK_THROWS_AS(group_elements({{1, 2, 3}}, kFull60), std::invalid_argument);  // incomplete
    CHECK_THROWS_AS(group_elements({{0, 1}}, kFull60), std::out_of_range);
    CHECK_THROWS_AS(group_elements({{1, 2, 3, 4, 5, 11}, {6, 7, 8, 9, 10}}, kFull60),
                    std::out_of_range);
}

TEST_CASE("block-list format round trip") {
    CoveringFamily fam = build_family(kSmall);
    std::ostringstream out;
    save_family(fam, out);

    std::istringstream in(out.str());
    CoveringFamily loaded = load_family(in);
    CHECK(loaded.n == fam.n);
    REQUIRE(loaded.blocks.size() == fam.blocks.size());
    CHECK(std::equal(fam.blocks.begin(), fam.blocks.end(), loaded.blocks.begin()));
    CHECK(loaded.tags == fam.tags);
    CHECK_FALSE(loaded.params.has_value());  // loaded families are data, not construction

    // non-comment line count equals the tagged count
    std::istringstream recount(out.str());
    std::string line;
    std::size_t data_lines = 0;
    while (std::getline(recount, line))
        if (!line.empty() && line[0] != '#') ++data_lines;
    CHECK(data_lines == fam.tagged_count());
}

TEST_CASE("loader rejects malformed input") {
    auto load_str = [](const std::string& text, std::optional<int> n = std::nullopt) {
        std::istringstream in(text);
        return load_family(in, n);
    };
    CHECK_THROWS_AS(load_str("1 2 3 4 5\n", 12), FamilyFormatError);          // five elements
    CHECK_THROWS_AS(load_str("1 2 3 4 5 6 7\n", 12), FamilyFormatError);     // seven elements
    CHECK_THROWS_AS(load_str("1 2 2 4 5 6\n", 12), FamilyFormatError);       // not ascending
    CHECK_THROWS_AS(load_str("1 2 3 4 5 six\n", 12), FamilyFormatError);     // junk token
    CHECK_THROWS_AS(load_str("1 2 3 4 5 13\n", 12), FamilyFormatError);      // outside [1,n]
    CHECK_THROWS_AS(load_str("1 2 3 4 5 6\n"), FamilyFormatError);           // n unknown
    CHECK_THROWS_AS(load_str("# n=70\n1 2 3 4 5 6\n"), FamilyFormatError);   // n too large
    CHECK_NOTHROW(load_str("# n=12\n1 2 3 4 5 6\n"));
    CHECK(load_str("1 2 3 4 5 6\n", 12).n == 12);

    // explicit n wins over the header
    CoveringFamily f = load_str("# n=12\n1 2 3 4 5 6\n", 24);
    CHECK(f.n == 24);
}

TEST_CASE("loader reads tag runs") {
    std::string text =
        "# n=12\n"
        "# tag=PairA\n"
        "1 2 3 4 5 6\n"
        "# tag=Base\n"
        "7 8 9 10 11 12\n";
    std::istringstream in(text);
    CoveringFamily fam = load_family(in);
    REQUIRE(fam.tags.size() == 2);
    CHECK(fam.tags[0] == BlockTag::PairA);
    CHECK(fam.tags[1] == BlockTag::Base);
}

}  // TEST_SUITE
