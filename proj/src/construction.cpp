#include "tcov/construction.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tcov {

const char* tag_name(BlockTag tag) noexcept {
    switch (tag) {
        case BlockTag::PairA: return "PairA";
        case BlockTag::PairC: return "PairC";
        case BlockTag::Base: return "Base";
        case BlockTag::External: return "External";
    }
    return "External";
}

std::optional<BlockTag> tag_from_name(const std::string& name) noexcept {
    if (name == "PairA") return BlockTag::PairA;
    if (name == "PairC") return BlockTag::PairC;
    if (name == "Base") return BlockTag::Base;
    if (name == "External") return BlockTag::External;
    return std::nullopt;
}

void ConstructionParams::validate() const {
    if (pairs_per_half < 3)
        throw std::invalid_argument("tcov: pairs_per_half must be >= 3 (got " +
                                    std::to_string(pairs_per_half) + ")");
    if (ground_set_size() > kMaxGroundSet)
        throw std::invalid_argument("tcov: ground set 4p = " + std::to_string(ground_set_size()) +
                                    " exceeds 64 elements");
    if (include_base_blocks && ground_set_size() % kBlockSize != 0)
        throw std::invalid_argument("tcov: base blocks require 6 | n, but n = " +
                                    std::to_string(ground_set_size()));
}

std::size_t CoveringFamily::count_tag(BlockTag tag) const noexcept {
    return std::size_t(std::count(tags.begin(), tags.end(), tag));
}

std::vector<Block> CoveringFamily::distinct_blocks() const {
    std::vector<Block> out = blocks;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void CoveringFamily::validate() const {
    if (n < kBlockSize || n > kMaxGroundSet)
        throw std::invalid_argument("tcov: family ground set must be in [6,64], got " +
                                    std::to_string(n));
    if (tags.size() != blocks.size())
        throw std::invalid_argument("tcov: family tags out of step with blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != kBlockSize)
            throw std::invalid_argument("tcov: family block " + std::to_string(i + 1) +
                                        " has size " + std::to_string(blocks[i].size()));
        if (!blocks[i].within(n))
            throw std::invalid_argument("tcov: family block " + std::to_string(i + 1) +
                                        " has elements outside [1," + std::to_string(n) + "]");
    }
}

std::vector<int> GroupPartition::sizes_in_base_blocks() const {
    std::vector<int> out;
    out.reserve(base_block_indices.size());
    for (const auto& g : base_block_indices) out.push_back(int(g.size()));
    return out;
}

std::vector<int> GroupPartition::sizes_in_elements() const {
    std::vector<int> out;
    out.reserve(groups.size());
    for (Block g : groups) out.push_back(g.size());
    return out;
}

Block make_pair(int index, Half half, const ConstructionParams& params) {
    params.validate();
    if (index < 1 || index > params.pairs_per_half)
        throw std::out_of_range("tcov: pair index " + std::to_string(index) + " outside [1," +
                                std::to_string(params.pairs_per_half) + "]");
    int offset = half == Half::A ? 0 : params.half_size();
    int lo = offset + 2 * index - 1;
    return Block{(1ull << (lo - 1)) | (1ull << lo)};
}

std::vector<Block> build_pair_family(Half half, const ConstructionParams& params) {
    params.validate();
    int p = params.pairs_per_half;
    std::vector<Block> pairs;
    pairs.reserve(std::size_t(p));
    for (int i = 1; i <= p; ++i) pairs.push_back(make_pair(i, half, params));

    std::vector<Block> out;
    out.reserve(binomial(p, 3));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            for (int k = j + 1; k < p; ++k)
                out.push_back(pairs[std::size_t(i)] | pairs[std::size_t(j)] | pairs[std::size_t(k)]);
    return out;
}

std::vector<Block> build_base_blocks(const ConstructionParams& params) {
    ConstructionParams pair_part = params;  // the base flag itself is not a precondition here
    pair_part.include_base_blocks = false;
    pair_part.validate();
    int n = params.ground_set_size();
    if (n % kBlockSize != 0)
        throw std::invalid_argument("tcov: base blocks require 6 | n, but n = " + std::to_string(n));
    std::vector<Block> out;
    out.reserve(std::size_t(n / kBlockSize));
    for (int g = 0; g < n / kBlockSize; ++g)
        out.push_back(Block{0x3full << (kBlockSize * g)});
    return out;
}

CoveringFamily build_family(const ConstructionParams& params) {
    params.validate();
    CoveringFamily fam;
    fam.n = params.ground_set_size();
    fam.params = params;

    for (Block b : build_pair_family(Half::A, params)) {
        fam.blocks.push_back(b);
        fam.tags.push_back(BlockTag::PairA);
    }
    for (Block b : build_pair_family(Half::C, params)) {
        fam.blocks.push_back(b);
        fam.tags.push_back(BlockTag::PairC);
    }
    if (params.include_base_blocks) {
        for (Block b : build_base_blocks(params)) {
            fam.blocks.push_back(b);
            fam.tags.push_back(BlockTag::Base);
        }
    }
    return fam;
}

GroupPartition group_elements(const std::vector<std::vector<int>>& base_block_groups,
                              const ConstructionParams& params) {
    params.validate();
    int n = params.ground_set_size();
    if (n % kBlockSize != 0)
        throw std::invalid_argument("tcov: element groups require base blocks, so 6 | n");
    int num_base = n / kBlockSize;
    std::vector<Block> base = build_base_blocks(params);

    GroupPartition part;
    part.n = n;
    std::vector<bool> seen(std::size_t(num_base) + 1, false);
    for (const auto& idxs : base_block_groups) {
        if (idxs.empty())
            throw std::invalid_argument("tcov: empty base-block group");
        Block g;
        for (int idx : idxs) {
            if (idx < 1 || idx > num_base)
                throw std::out_of_range("tcov: base-block index " + std::to_string(idx) +
                                        " outside [1," + std::to_string(num_base) + "]");
            if (seen[std::size_t(idx)])
                throw std::invalid_argument("tcov: base-block index " + std::to_string(idx) +
                                            " appears in two groups");
            seen[std::size_t(idx)] = true;
            g = g | base[std::size_t(idx - 1)];
        }
        part.groups.push_back(g);
        part.base_block_indices.push_back(idxs);
    }
    for (int idx = 1; idx <= num_base; ++idx)
        if (!seen[std::size_t(idx)])
            throw std::invalid_argument("tcov: base-block index " + std::to_string(idx) +
                                        " missing from the grouping");
    return part;
}

// ---- block-list file format ---------------------------------------------

void save_family(const CoveringFamily& family, std::ostream& out) {
    family.validate();
    out << "# n=" << family.n;
    if (family.params) {
        out << " p=" << family.params->pairs_per_half
            << " base=" << (family.params->include_base_blocks ? "true" : "false");
    }
    out << " tagged=" << family.tagged_count() << " distinct=" << family.distinct_count() << '\n';

    BlockTag current = BlockTag::External;
    bool first = true;
    for (std::size_t i = 0; i < family.blocks.size(); ++i) {
        if (first || family.tags[i] != current) {
            current = family.tags[i];
            first = false;
            out << "# tag=" << tag_name(current) << '\n';
        }
        out << family.blocks[i].str() << '\n';
    }
}

void save_family(const CoveringFamily& family, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FamilyFormatError("tcov: cannot open '" + path + "' for writing");
    save_family(family, out);
    if (!out) throw FamilyFormatError("tcov: write to '" + path + "' failed");
}

namespace {

void parse_header_token(const std::string& token, std::optional<int>& header_n,
                        BlockTag& current_tag) {
    auto eq = token.find('=');
    if (eq == std::string::npos) return;
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "n") {
        try {
            header_n = std::stoi(value);
        } catch (const std::exception&) {
            throw FamilyFormatError("tcov: bad n= value '" + value + "'");
        }
    } else if (key == "tag") {
        auto tag = tag_from_name(value);
        if (!tag) throw FamilyFormatError("tcov: unknown tag '" + value + "'");
        current_tag = *tag;
    }
    // other keys (p=, base=, tagged=, distinct=) are informational
}

}  // namespace

CoveringFamily load_family(std::istream& in, std::optional<int> n_override) {
    CoveringFamily fam;
    std::optional<int> header_n;
    BlockTag current_tag = BlockTag::External;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            std::istringstream hs(line.substr(start + 1));
            std::string token;
            while (hs >> token) parse_header_token(token, header_n, current_tag);
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> elems;
        int v;
        while (ls >> v) elems.push_back(v);
        if (!ls.eof()) {
            std::string rest;
            ls.clear();
            ls >> rest;
            throw FamilyFormatError("tcov: line " + std::to_string(lineno) +
                                    ": unexpected token '" + rest + "'");
        }
        if (elems.size() != kBlockSize)
            throw FamilyFormatError("tcov: line " + std::to_string(lineno) + ": expected 6 elements, got " +
                                    std::to_string(elems.size()));
        for (std::size_t i = 1; i < elems.size(); ++i)
            if (elems[i] <= elems[i - 1])
                throw FamilyFormatError("tcov: line " + std::to_string(lineno) +
                                        ": elements must be strictly ascending");
        if (elems.front() < 1)
            throw FamilyFormatError("tcov: line " + std::to_string(lineno) + ": elements are 1-based");
        if (elems.back() > kMaxGroundSet)
            throw FamilyFormatError("tcov: line " + std::to_string(lineno) + ": element " +
                                    std::to_string(elems.back()) + " exceeds 64");
        fam.blocks.push_back(Block::from_elements(elems));
        fam.tags.push_back(current_tag);
    }

    if (n_override) {
        fam.n = *n_override;
    } else if (header_n) {
        fam.n = *header_n;
    } else {
        throw FamilyFormatError("tcov: ground-set size unknown (no '# n=' header; pass n explicitly)");
    }
    if (fam.n < kBlockSize || fam.n > kMaxGroundSet)
        throw FamilyFormatError("tcov: ground-set size " + std::to_string(fam.n) +
                                " outside [6,64]");
    for (std::size_t i = 0; i < fam.blocks.size(); ++i)
        if (!fam.blocks[i].within(fam.n))
            throw FamilyFormatError("tcov: block " + std::to_string(i + 1) +
                                    " has elements outside [1," + std::to_string(fam.n) + "]");
    return fam;
}

CoveringFamily load_family(const std::string& path, std::optional<int> n_override) {
    std::ifstream in(path);
    if (!in) throw FamilyFormatError("tcov: cannot open '" + path + "'");
    return load_family(in, n_override);
}

}  // namespace tcov
