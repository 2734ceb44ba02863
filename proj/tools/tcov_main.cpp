// tcov — toolkit for triple-intersection covering families of 6-subsets:
// generate the pair-based family, verify coverage exhaustively, produce
// constructive witnesses, report counting bounds, demonstrate partition
// obstructions, and prune redundant blocks.
//
// Exit codes: 0 success / coverage verified; 1 coverage failure; 2 usage or
// input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tcov/bounds.hpp"
#include "tcov/combinatorics.hpp"
#include "tcov/construction.hpp"
#include "tcov/optimizer.hpp"
#include "tcov/partition.hpp"
#include "tcov/verifier.hpp"
#include "tcov/witness.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCoverageFailure = 1;
constexpr int kExitUsage = 2;

json block_json(tcov::Block b) {
    return json(b.elements());
}

void emit_json(const json& j, const std::string& path) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
}

// Keep-first deduplication, preserving family order and tags.
tcov::CoveringFamily dedup_keep_first(const tcov::CoveringFamily& fam) {
    tcov::CoveringFamily out;
    out.n = fam.n;
    std::vector<std::uint64_t> seen;
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        std::uint64_t bits = fam.blocks[i].bits;
        if (std::find(seen.begin(), seen.end(), bits) != seen.end()) continue;
        seen.push_back(bits);
        out.blocks.push_back(fam.blocks[i]);
        out.tags.push_back(fam.tags[i]);
    }
    return out;
}

struct FamilySource {
    bool builtin = false;
    std::string path;
    int p = 15;
    bool no_base = false;
    int n_flag = 0;  // 0 = unset

    tcov::ConstructionParams params() const {
        return tcov::ConstructionParams{p, !no_base};
    }

    // Resolves to (family, n, label). Throws for usage errors.
    std::tuple<tcov::CoveringFamily, int, std::string> resolve() const {
        if (!builtin && path.empty())
            throw std::invalid_argument("pass --family PATH or --builtin");
        if (builtin) {
            tcov::ConstructionParams prm = params();
            prm.validate();
            int n = prm.ground_set_size();
            if (n_flag != 0 && n_flag != n)
                throw std::invalid_argument("--n " + std::to_string(n_flag) +
                                            " contradicts the builtin ground set 4p = " +
                                            std::to_string(n));
            return {tcov::build_family(prm), n, "builtin"};
        }
        std::optional<int> n_override;
        if (n_flag != 0) n_override = n_flag;
        tcov::CoveringFamily fam = tcov::load_family(path, n_override);
        return {fam, fam.n, path};
    }
};

void add_family_flags(CLI::App* cmd, FamilySource& src, bool with_params = true) {
    auto* fam = cmd->add_option("--family", src.path, "block-list file to read");
    auto* bi = cmd->add_flag("--builtin", src.builtin, "use the constructed pair family");
    fam->excludes(bi);
    bi->excludes(fam);
    cmd->add_option("--n", src.n_flag, "ground-set size (file families without a header)");
    if (with_params) {
        cmd->add_option("--p", src.p, "pairs per half for --builtin (default 15)");
        cmd->add_flag("--no-base", src.no_base, "omit the base blocks from --builtin");
    }
}

std::vector<std::vector<int>> parse_grouping(const std::string& spec) {
    std::vector<std::vector<int>> groups;
    std::stringstream outer(spec);
    std::string part;
    while (std::getline(outer, part, ';')) {
        std::vector<int> idxs;
        std::stringstream inner(part);
        std::string tok;
        while (std::getline(inner, tok, ',')) {
            std::size_t pos = tok.find_first_not_of(" \t");
            if (pos == std::string::npos) continue;
            idxs.push_back(std::stoi(tok.substr(pos)));
        }
        if (!idxs.empty()) groups.push_back(idxs);
    }
    if (groups.empty()) throw std::invalid_argument("empty grouping spec '" + spec + "'");
    return groups;
}

// ---- generate --------------------------------------------------------------

struct GenerateConfig {
    int p = 15;
    bool no_base = false;
    bool distinct_only = false;
    std::string out;
    std::string json_path;
};

int run_generate(const GenerateConfig& cfg) {
    tcov::ConstructionParams params{cfg.p, !cfg.no_base};
    params.validate();
    tcov::CoveringFamily fam = tcov::build_family(params);
    std::size_t tagged = fam.tagged_count();
    std::size_t distinct = fam.distinct_count();

    tcov::CoveringFamily to_write = cfg.distinct_only ? dedup_keep_first(fam) : fam;
    std::ostream* sink = &std::cout;
    std::ofstream file;
    if (!cfg.out.empty() && cfg.out != "-") {
        file.open(cfg.out);
        if (!file) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
        sink = &file;
    }
    tcov::save_family(to_write, *sink);
    sink->flush();

    std::ostream& info = (sink == &std::cout) ? std::cerr : std::cout;
    info << "n=" << fam.n << " p=" << params.pairs_per_half << " base="
         << (params.include_base_blocks ? "true" : "false") << '\n'
         << "blocks: PairA=" << fam.count_tag(tcov::BlockTag::PairA)
         << " PairC=" << fam.count_tag(tcov::BlockTag::PairC)
         << " Base=" << fam.count_tag(tcov::BlockTag::Base) << '\n'
         << "tagged=" << tagged << " distinct=" << distinct << '\n'
         << "written: " << to_write.tagged_count() << " blocks"
         << (cfg.out.empty() || cfg.out == "-" ? "" : " to " + cfg.out) << '\n';

    emit_json(json{{"command", "generate"},
                   {"n", fam.n},
                   {"p", params.pairs_per_half},
                   {"include_base", params.include_base_blocks},
                   {"distinct_only", cfg.distinct_only},
                   {"tagged", tagged},
                   {"distinct", distinct},
                   {"written", to_write.tagged_count()},
                   {"tag_counts",
                    json{{"PairA", fam.count_tag(tcov::BlockTag::PairA)},
                         {"PairC", fam.count_tag(tcov::BlockTag::PairC)},
                         {"Base", fam.count_tag(tcov::BlockTag::Base)}}},
                   {"out", cfg.out}},
              cfg.json_path);
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyConfig {
    FamilySource src;
    std::string mode = "full";
    std::string strategy = "auto";
    int workers = 0;
    std::uint64_t chunk_size = 1ull << 20;
    std::string json_path;
};

int run_verify(const VerifyConfig& cfg) {
    auto [fam, n, label] = cfg.src.resolve();

    tcov::VerifyMode mode =
        cfg.mode == "histogram" ? tcov::VerifyMode::Histogram : tcov::VerifyMode::Full;
    tcov::VerifyStrategy strategy;
    if (cfg.strategy == "witness") {
        strategy = tcov::VerifyStrategy::Witness;
    } else if (cfg.strategy == "scan") {
        strategy = tcov::VerifyStrategy::Scan;
    } else {  // auto: O(1)-per-subset witness check when it applies
        strategy = (cfg.src.builtin && mode == tcov::VerifyMode::Full)
                       ? tcov::VerifyStrategy::Witness
                       : tcov::VerifyStrategy::Scan;
    }

    tcov::ParallelOptions par{cfg.workers, cfg.chunk_size};
    tcov::CoverageReport rep = tcov::verify_exhaustive(fam, n, mode, strategy, par);

    std::cout << "family: " << label << " (n=" << n << ", " << fam.tagged_count() << " blocks)\n"
              << "strategy: " << tcov::strategy_name(rep.strategy)
              << "  mode: " << tcov::mode_name(rep.mode) << "  workers: " << rep.workers_used
              << '\n'
              << "universe: " << rep.universe_size << " subsets\n"
              << "uncovered: " << rep.uncovered_count << '\n';
    if (rep.first_uncovered)
        std::cout << "first uncovered: {" << rep.first_uncovered->str() << "}\n";
    if (rep.max_intersection_histogram) {
        std::cout << "max-intersection histogram:\n";
        for (int i = 0; i <= 6; ++i)
            std::cout << "  " << i << ": " << (*rep.max_intersection_histogram)[std::size_t(i)]
                      << '\n';
    }
    std::cout << "covered: " << (rep.covered() ? "yes" : "NO") << '\n'
              << "elapsed: " << rep.elapsed_seconds << " s\n";

    json j{{"command", "verify"},
           {"family", label},
           {"n", n},
           {"blocks", fam.tagged_count()},
           {"strategy", tcov::strategy_name(rep.strategy)},
           {"mode", tcov::mode_name(rep.mode)},
           {"workers", rep.workers_used},
           {"chunk_size", cfg.chunk_size},
           {"universe", rep.universe_size},
           {"uncovered", rep.uncovered_count},
           {"covered", rep.covered()},
           {"first_uncovered", nullptr},
           {"histogram", nullptr},
           {"elapsed_seconds", rep.elapsed_seconds}};
    if (rep.first_uncovered) j["first_uncovered"] = block_json(*rep.first_uncovered);
    if (rep.max_intersection_histogram) j["histogram"] = *rep.max_intersection_histogram;
    emit_json(j, cfg.json_path);

    return rep.covered() ? kExitOk : kExitCoverageFailure;
}

// ---- witness ---------------------------------------------------------------

struct WitnessConfig {
    std::vector<int> elements;
    int p = 15;
    std::string json_path;
};

int run_witness(const WitnessConfig& cfg) {
    tcov::ConstructionParams params{cfg.p, /*include_base=*/false};
    tcov::Block s = tcov::Block::from_elements(cfg.elements);
    tcov::WitnessResult w = tcov::find_witness(s, params);

    std::cout << "subset: {" << s.str() << "}\n"
              << "side: " << (w.side == tcov::Half::A ? 'A' : 'C') << '\n'
              << "pairs: " << w.pair_indices[0] << ' ' << w.pair_indices[1] << ' '
              << w.pair_indices[2] << '\n'
              << "block: {" << w.block.str() << "}\n"
              << "intersection: " << w.intersection << '\n';

    emit_json(json{{"command", "witness"},
                   {"n", params.ground_set_size()},
                   {"p", cfg.p},
                   {"subset", block_json(s)},
                   {"side", w.side == tcov::Half::A ? "A" : "C"},
                   {"pair_indices", w.pair_indices},
                   {"block", block_json(w.block)},
                   {"intersection", w.intersection}},
              cfg.json_path);
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsConfig {
    int n = 60;
    std::string json_path;
};

int run_bounds(const BoundsConfig& cfg) {
    if (cfg.n % 4 != 0)
        throw std::invalid_argument("bounds needs 4 | n so the pair construction exists (got n=" +
                                    std::to_string(cfg.n) + ")");
    tcov::ConstructionParams params{cfg.n / 4, cfg.n % 6 == 0};
    tcov::BoundsSummary s = tcov::bounds_summary(params);

    std::cout << "n: " << s.n << '\n'
              << "universe C(n,6): " << s.universe << '\n'
              << "per-block coverage N: " << s.per_block_coverage << '\n'
              << "counting lower bound: " << s.lower_bound << '\n'
              << "construction upper bound: " << s.upper_bound_tagged << " tagged, "
              << s.upper_bound_distinct << " distinct\n"
              << "bracket: " << s.lower_bound << " <= M <= " << s.upper_bound_tagged
              << " (distinct view: " << s.upper_bound_distinct << ")\n";

    emit_json(json{{"command", "bounds"},
                   {"n", s.n},
                   {"universe", s.universe},
                   {"per_block_coverage", s.per_block_coverage},
                   {"lower_bound", s.lower_bound},
                   {"upper_bound_tagged", s.upper_bound_tagged},
                   {"upper_bound_distinct", s.upper_bound_distinct}},
              cfg.json_path);
    return kExitOk;
}

// ---- obstruct ----------------------------------------------------------------

struct ObstructConfig {
    std::string grouping = "1,2,3;4,5,6;7,8,9,10";
    int p = 15;
    std::string json_path;
};

int run_obstruct(const ObstructConfig& cfg) {
    tcov::ConstructionParams params{cfg.p, /*include_base=*/true};
    params.validate();
    auto groups_spec = parse_grouping(cfg.grouping);
    tcov::GroupPartition grouping = tcov::group_elements(groups_spec, params);

    tcov::Block s = tcov::find_balanced_obstruction(grouping);
    tcov::DistributionProfile prof = tcov::distribution(s, grouping);
    int within_max = tcov::max_within_group_intersection(s, grouping, params);

    tcov::CoveringFamily fam = tcov::build_family(params);
    std::optional<tcov::Block> cover = tcov::covered_by(fam, s);

    std::cout << "grouping (base blocks):";
    for (const auto& g : grouping.base_block_indices) {
        std::cout << " {";
        for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
        std::cout << "}";
    }
    std::cout << '\n' << "group sizes (elements):";
    for (int sz : grouping.sizes_in_elements()) std::cout << ' ' << sz;
    std::cout << '\n'
              << "balanced subset: {" << s.str() << "}\n"
              << "distribution:";
    for (int c : prof.counts) std::cout << ' ' << c;
    std::cout << '\n'
              << "within-group max intersection: " << within_max << '\n'
              << "covered by full family: " << (cover ? "yes" : "NO") << '\n';
    if (cover) std::cout << "covering block: {" << cover->str() << "}\n";

    json j{{"command", "obstruct"},
           {"n", params.ground_set_size()},
           {"p", cfg.p},
           {"grouping", grouping.base_block_indices},
           {"group_sizes_base", grouping.sizes_in_base_blocks()},
           {"group_sizes_elements", grouping.sizes_in_elements()},
           {"balanced_subset", block_json(s)},
           {"distribution", prof.counts},
           {"within_group_max_intersection", within_max},
           {"covered_by_family", cover.has_value()},
           {"covering_block", nullptr}};
    if (cover) j["covering_block"] = block_json(*cover);
    emit_json(j, cfg.json_path);
    return kExitOk;
}

// ---- prune -------------------------------------------------------------------

struct PruneConfig {
    FamilySource src;
    int restarts = 1;
    std::uint64_t seed = 0;
    std::string out;
    int workers = 0;
    std::uint64_t chunk_size = 1ull << 20;
    std::string json_path;
};

int run_prune(const PruneConfig& cfg) {
    auto [fam, n, label] = cfg.src.resolve();
    tcov::ParallelOptions par{cfg.workers, cfg.chunk_size};

    tcov::PruneSearchResult res;
    try {
        res = tcov::prune_search(fam, n, cfg.restarts, cfg.seed, par);
    } catch (const tcov::NotACoverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCoverageFailure;
    }

    const tcov::PruneResult& best = res.best;
    if (!cfg.out.empty()) tcov::save_family(best.family, cfg.out);

    std::cout << "family: " << label << " (n=" << n << ")\n"
              << "input size: " << fam.tagged_count() << '\n'
              << "restarts: " << cfg.restarts << " seed: " << cfg.seed << '\n';
    if (!res.restart_sizes.empty()) {
        std::cout << "restart sizes:";
        for (std::size_t sz : res.restart_sizes) std::cout << ' ' << sz;
        std::cout << '\n';
    }
    std::cout << "result size: " << best.family.tagged_count() << " (removed "
              << best.removed.size() << ")\n";
    if (best.verification)
        std::cout << "re-verified: uncovered=" << best.verification->uncovered_count << " over "
                  << best.verification->universe_size << " subsets ("
                  << tcov::strategy_name(best.verification->strategy) << ")\n";
    if (!cfg.out.empty()) std::cout << "written: " << cfg.out << '\n';

    json removed = json::array();
    for (const auto& rec : best.removed)
        removed.push_back(json{{"index", rec.index},
                               {"block", block_json(rec.block)},
                               {"tag", tcov::tag_name(rec.tag)},
                               {"duplicate", rec.duplicate}});
    json j{{"command", "prune"},
           {"family", label},
           {"n", n},
           {"input_tagged", fam.tagged_count()},
           {"restarts", cfg.restarts},
           {"seed", cfg.seed},
           {"restart_sizes", res.restart_sizes},
           {"result_size", best.family.tagged_count()},
           {"removed_count", best.removed.size()},
           {"removed", removed},
           {"out", cfg.out},
           {"verification", nullptr}};
    if (best.verification)
        j["verification"] = json{{"universe", best.verification->universe_size},
                                 {"uncovered", best.verification->uncovered_count},
                                 {"covered", best.verification->covered()},
                                 {"strategy", tcov::strategy_name(best.verification->strategy)}};
    emit_json(j, cfg.json_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple-intersection covering toolkit for 6-subsets of [n]"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    GenerateConfig gen;
    auto* cmd_gen = app.add_subcommand("generate", "build the pair family and write a block list");
    cmd_gen->add_option("--p", gen.p, "pairs per half (default 15)");
    cmd_gen->add_flag("--no-base", gen.no_base, "omit the base blocks");
    cmd_gen->add_flag("--distinct", gen.distinct_only, "write deduplicated blocks");
    cmd_gen->add_option("--out,-o", gen.out, "output path (default: stdout)");
    cmd_gen->add_option("--json", gen.json_path, "write a JSON summary ('-' = stdout)");
    cmd_gen->callback([&] { exit_code = run_generate(gen); });

    VerifyConfig ver;
    auto* cmd_ver = app.add_subcommand("verify", "check the covering property over all 6-subsets");
    add_family_flags(cmd_ver, ver.src);
    cmd_ver->add_option("--mode", ver.mode, "full | histogram")
        ->check(CLI::IsMember({"full", "histogram"}));
    cmd_ver->add_option("--strategy", ver.strategy, "scan | witness | auto")
        ->check(CLI::IsMember({"scan", "witness", "auto"}));
    cmd_ver->add_option("--workers", ver.workers, "worker threads (0 = hardware)");
    cmd_ver->add_option("--chunk-size", ver.chunk_size, "subsets per work chunk");
    cmd_ver->add_option("--json", ver.json_path, "write the report as JSON ('-' = stdout)");
    cmd_ver->callback([&] { exit_code = run_verify(ver); });

    WitnessConfig wit;
    auto* cmd_wit = app.add_subcommand("witness", "covering block for one 6-subset");
    cmd_wit->add_option("elements", wit.elements, "six elements of the subset")
        ->expected(6)
        ->required();
    cmd_wit->add_option("--p", wit.p, "pairs per half (default 15)");
    cmd_wit->add_option("--json", wit.json_path, "write the result as JSON ('-' = stdout)");
    cmd_wit->callback([&] { exit_code = run_witness(wit); });

    BoundsConfig bnd;
    auto* cmd_bnd = app.add_subcommand("bounds", "counting bounds for the family size");
    cmd_bnd->add_option("--n", bnd.n, "ground-set size (default 60)");
    cmd_bnd->add_option("--json", bnd.json_path, "write the summary as JSON ('-' = stdout)");
    cmd_bnd->callback([&] { exit_code = run_bounds(bnd); });

    ObstructConfig obs;
    auto* cmd_obs = app.add_subcommand("obstruct", "balanced-subset obstruction for a grouping");
    cmd_obs->add_option("--grouping", obs.grouping,
                        "semicolon-separated groups of base-block indices");
    cmd_obs->add_option("--p", obs.p, "pairs per half (default 15)");
    cmd_obs->add_option("--json", obs.json_path, "write the result as JSON ('-' = stdout)");
    cmd_obs->callback([&] { exit_code = run_obstruct(obs); });

    PruneConfig prn;
    auto* cmd_prn = app.add_subcommand("prune", "remove redundant blocks, keeping full coverage");
    add_family_flags(cmd_prn, prn.src);
    cmd_prn->add_option("--restarts", prn.restarts, "random removal orders to try (default 1)");
    cmd_prn->add_option("--seed", prn.seed, "seed for the removal orders");
    cmd_prn->add_option("--out,-o", prn.out, "write the reduced family to this path");
    cmd_prn->add_option("--workers", prn.workers, "worker threads (0 = hardware)");
    cmd_prn->add_option("--chunk-size", prn.chunk_size, "subsets per work chunk");
    cmd_prn->add_option("--json", prn.json_path, "write the removal log as JSON ('-' = stdout)");
    cmd_prn->callback([&] { exit_code = run_prune(prn); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
