#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcov/combinatorics.hpp"

namespace tcov {

enum class Half { A, C };

enum class BlockTag : std::uint8_t { PairA, PairC, Base, External };

const char* tag_name(BlockTag tag) noexcept;
std::optional<BlockTag> tag_from_name(const std::string& name) noexcept;

// Parameters of the pair construction: ground set [4p] split into halves of
// 2p elements, each half partitioned into p consecutive pairs.
struct ConstructionParams {
    int pairs_per_half = 15;
    bool include_base_blocks = true;

    int ground_set_size() const noexcept { return 4 * pairs_per_half; }
    int half_size() const noexcept { return 2 * pairs_per_half; }
    int base_block_count() const noexcept { return ground_set_size() / kBlockSize; }

    // p >= 3, 4p <= 64, and base blocks only when 6 | 4p.
    void validate() const;
};

struct CoveringFamily {
    int n = 0;
    std::vector<Block> blocks;
    std::vector<BlockTag> tags;
    // Set only by build_family; loaded or pruned families leave it empty.
    std::optional<ConstructionParams> params;

    std::size_t tagged_count() const noexcept { return blocks.size(); }
    std::size_t count_tag(BlockTag tag) const noexcept;
    std::vector<Block> distinct_blocks() const;  // sorted, deduplicated
    std::size_t distinct_count() const { return distinct_blocks().size(); }

    // size-6, in-range, tags aligned with blocks
    void validate() const;
};

// Disjoint element groups covering [n], each a union of base blocks.
struct GroupPartition {
    int n = 0;
    std::vector<Block> groups;                         // element masks
    std::vector<std::vector<int>> base_block_indices;  // 1-based, per group

    std::size_t group_count() const noexcept { return groups.size(); }
    std::vector<int> sizes_in_base_blocks() const;
    std::vector<int> sizes_in_elements() const;
};

// Pair number `index` (1-based) of the given half: {2i-1, 2i} in half A,
// offset by the half size in half C.
Block make_pair(int index, Half half, const ConstructionParams& params);

// All C(p,3) unions of three distinct pairs of one half, ordered by the
// lexicographic pair-index triple (i,j,k).
std::vector<Block> build_pair_family(Half half, const ConstructionParams& params);

// The n/6 consecutive 6-blocks partitioning [n]; requires 6 | n.
std::vector<Block> build_base_blocks(const ConstructionParams& params);

// Pair-family blocks of half A, then half C, then the base blocks. Tagged
// entries may repeat as blocks (each base block coincides with the union of
// its three internal pairs); distinct_blocks() gives the deduplicated set.
CoveringFamily build_family(const ConstructionParams& params);

// Element-level partition from base-block index sets, which must partition
// {1, ..., n/6}.
GroupPartition group_elements(const std::vector<std::vector<int>>& base_block_groups,
                              const ConstructionParams& params);

// ---- block-list interchange format -------------------------------------
//
// UTF-8 text, one block per line: six ascending 1-based integers separated
// by single spaces, ordered as in the family. '#' lines carry parameters
// (`# n=60 p=15 base=true`) and tag runs (`# tag=PairA`).

struct FamilyFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save_family(const CoveringFamily& family, std::ostream& out);
void save_family(const CoveringFamily& family, const std::string& path);

CoveringFamily load_family(std::istream& in, std::optional<int> n_override = std::nullopt);
CoveringFamily load_family(const std::string& path, std::optional<int> n_override = std::nullopt);

}  // namespace tcov
