#pragma once

#include <filesystem>
#include <iosfwd>

#include "scholrank/config.hpp"
#include "scholrank/graph.hpp"

namespace scholrank {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIngest = 2,
    kExitRank = 3,
    kExitCompare = 4,
};

/// Parses the corpus, applies the min-citation cut and writes the graph bundle to cfg.graph_bundle()
/// plus ingest_summary.txt in cfg.out_dir.
int cmd_ingest(const RunConfig& cfg, std::ostream& log);

/// Ranks the bundle under every requested setting: rank_<setting>.tsv files and run_manifest.txt.
int cmd_rank(const RunConfig& cfg, std::ostream& log);

/// Compares rank reports: correlations.tsv, topk_overlap.tsv, citation_corr.tsv and plot_data.tsv.
/// Uses the configured settings, or every rank_*.tsv in the output directory when none are configured.
int cmd_compare(const RunConfig& cfg, std::ostream& log);

/// Writes a synthetic corpus (articles.tsv, authorship.tsv, ...) into cfg.out_dir.
int cmd_fixture(const RunConfig& cfg, std::ostream& log);

void write_bundle(const ScholGraph& g, const std::filesystem::path& dir);
ScholGraph read_bundle(const std::filesystem::path& dir);

}  // namespace scholrank
