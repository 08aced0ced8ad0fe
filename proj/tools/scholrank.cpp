// scholrank: ingest a scholarly corpus, rank articles under coefficient settings, compare the rankings.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scholrank/commands.hpp"
#include "scholrank/config.hpp"

int main(int argc, char** argv) {
    using namespace scholrank;

    CLI::App app{"Hybrid HITS/PageRank ranking of heterogeneous scholarly networks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> presets;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    app.add_option("--config", config_path, "Key-value configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides output.dir)");
    app.add_option("--preset", presets, "Preset setting name; repeatable (overrides rank.presets)");
    app.add_option("--seed", seed, "Fixture seed (overrides fixture.seed)");
    app.add_option("--workers", workers, "Worker threads (overrides rank.workers)");

    auto* ingest = app.add_subcommand("ingest", "Parse the corpus and write the min-citation graph bundle");
    auto* rank = app.add_subcommand("rank", "Rank the graph bundle under each requested setting");
    auto* compare = app.add_subcommand("compare", "Correlate, overlap and citation-compare rank reports");
    auto* fixture = app.add_subcommand("fixture", "Write a synthetic corpus");
    for (auto* sub : {ingest, rank, compare, fixture}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;  // --help exits 0
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_run_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!presets.empty()) {
        cfg.presets = presets;
        cfg.inline_settings.clear();
    }
    if (seed) cfg.seed = *seed;
    if (workers) cfg.workers = *workers;

    try {
        if (*ingest) return cmd_ingest(cfg, std::cerr);
        if (*rank) return cmd_rank(cfg, std::cerr);
        if (*compare) return cmd_compare(cfg, std::cerr);
        if (*fixture) return cmd_fixture(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
