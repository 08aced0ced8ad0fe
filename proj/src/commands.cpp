#include "scholrank/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "scholrank/eval.hpp"
#include "scholrank/ingest.hpp"
#include "scholrank/ranking.hpp"
#include "scholrank/weighting.hpp"

namespace scholrank {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

}  // namespace

void write_bundle(const ScholGraph& g, const fs::path& dir) {
    write_corpus(g, dir);
    std::ofstream meta(dir / "meta.tsv");
    if (!meta) throw IngestError(IngestErrc::MissingFile, "cannot write " + (dir / "meta.tsv").string());
    meta << "key\tvalue\nt_current\t" << g.t_current() << '\n';
}

ScholGraph read_bundle(const fs::path& dir) {
    auto cfg = IngestConfig::defaults();
    cfg.accuracy_threshold = 0;
    cfg.require_year = true;
    cfg.require_journal = false;
    cfg.apply_type_filter = false;

    std::ifstream meta(dir / "meta.tsv");
    if (!meta) throw IngestError(IngestErrc::MissingFile, "cannot open " + (dir / "meta.tsv").string());
    std::string key, value;
    std::getline(meta, key);  // header
    while (meta >> key >> value) {
        if (key == "t_current") cfg.t_current = std::stoi(value);
    }
    return parse_corpus(CorpusPaths::in_directory(dir), cfg);
}

int cmd_ingest(const RunConfig& cfg, std::ostream& log) {
    IngestSummary summary;
    ScholGraph cut;
    try {
        auto full = parse_corpus(cfg.corpus, cfg.ingest, &summary);
        cut = subgraph_by_min_citations(full, cfg.ingest.min_citation_threshold);
        ensure_dir(cfg.out_dir);
        write_bundle(cut, cfg.graph_bundle());
    } catch (const IngestError& e) {
        log << "error: " << e.what() << '\n';
        return kExitIngest;
    } catch (const GraphError& e) {
        log << "error: " << e.what() << '\n';
        return kExitIngest;
    }
    for (const auto& w : summary.warnings) log << "warning: " << w << '\n';

    summary.counts["subgraph_articles"] = cut.article_count();
    summary.counts["subgraph_authors"] = cut.author_count();
    summary.counts["subgraph_journals"] = cut.journal_count();
    summary.counts["subgraph_topics"] = cut.topic_count();
    summary.counts["subgraph_citations"] = cut.citations().size();
    std::ofstream out(cfg.out_dir / "ingest_summary.txt");
    out << "min_citation_threshold\t" << cfg.ingest.min_citation_threshold << '\n';
    for (const auto& [k, v] : summary.counts) out << k << '\t' << v << '\n';
    log << "ingest: " << cut.article_count() << " articles, " << cut.author_count() << " authors, "
        << cut.journal_count() << " journals, " << cut.topic_count() << " topics, " << cut.citations().size()
        << " citations\n";
    return kExitOk;
}

int cmd_rank(const RunConfig& cfg, std::ostream& log) {
    std::vector<Setting> settings;
    try {
        settings = cfg.settings();
        if (settings.empty()) throw RankingError("no settings requested (use --preset or rank.presets)");
        for (const auto& s : settings) s.validate();
        cfg.similarity.validate();
        cfg.time.validate();
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return kExitRank;
    }

    ScholGraph g;
    try {
        g = read_bundle(cfg.graph_bundle());
    } catch (const std::exception& e) {
        log << "error: cannot load graph bundle: " << e.what() << '\n';
        return kExitRank;
    }

    EdgeWeights weights;
    if (!g.citations().empty()) {
        weights = compute_edge_weights(g, cfg.similarity, cfg.workers);
    } else {
        log << "warning: graph has no citations; the PageRank term spreads mass uniformly\n";
    }

    ensure_dir(cfg.out_dir);
    if (cfg.dump_weights && !weights.empty()) write_edge_weights(cfg.out_dir / "edge_weights.tsv", g, weights);

    RankOptions opts;
    opts.workers = cfg.workers;
    opts.renormalize = cfg.renormalize;
    std::vector<std::string> manifest_notes;
    for (const auto& s : settings) {
        auto report = run_ranking(g, weights, s, cfg.time, opts);
        const auto path = cfg.out_dir / ("rank_" + setting_file_stem(s.name) + ".tsv");
        write_rank_report(path, g, report);
        for (const auto& w : report.warnings) {
            log << "warning: " << s.name << ": " << w << '\n';
            manifest_notes.push_back(s.name + ": " + w);
        }
        log << "rank: " << s.name << " -> " << path.filename().string() << " (" << report.iterations
            << " iterations" << (report.converged ? "" : ", not converged") << ")\n";
    }

    std::ofstream manifest(cfg.out_dir / "run_manifest.txt");
    manifest << "# graph\n# articles " << g.article_count() << ", citations " << g.citations().size()
             << ", t_current " << g.t_current() << '\n';
    if (!weights.empty()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "# tau_n %.17g, tau_s %.17g\n", weights.tau_n, weights.tau_s);
        manifest << buf;
    }
    write_manifest(manifest, cfg);
    for (const auto& note : manifest_notes) manifest << "# warning: " << note << '\n';
    return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& log) {
    std::vector<std::pair<std::string, fs::path>> reports;
    try {
        for (const auto& s : cfg.settings()) {
            reports.emplace_back(s.name, cfg.out_dir / ("rank_" + setting_file_stem(s.name) + ".tsv"));
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return kExitCompare;
    }
    if (reports.empty() && fs::is_directory(cfg.out_dir)) {
        for (const auto& entry : fs::directory_iterator(cfg.out_dir)) {
            const auto name = entry.path().filename().string();
            if (name.starts_with("rank_") && name.ends_with(".tsv")) {
                reports.emplace_back(name.substr(5, name.size() - 9), entry.path());
            }
        }
        std::sort(reports.begin(), reports.end());
    }
    if (reports.size() < 2) {
        log << "error: compare needs at least 2 rank reports, found " << reports.size() << '\n';
        return kExitCompare;
    }

    try {
        std::vector<Ranking> rankings;
        for (const auto& [name, path] : reports) rankings.push_back(read_rank_report(path, name));
        auto m = comparison_matrix(rankings, cfg.workers);
        write_correlations(cfg.out_dir / "correlations.tsv", m);
        write_plot_data(cfg.out_dir / "plot_data.tsv", m);
        write_topk_overlap(cfg.out_dir / "topk_overlap.tsv", rankings, cfg.k);
        if (fs::exists(cfg.graph_bundle() / "meta.tsv")) {
            write_citation_correlations(cfg.out_dir / "citation_corr.tsv", rankings, read_bundle(cfg.graph_bundle()));
        } else {
            log << "warning: no graph bundle at " << cfg.graph_bundle().string() << ", skipping citation_corr.tsv\n";
        }
    } catch (const EvalError& e) {
        log << "error: " << e.what() << '\n';
        return kExitCompare;
    } catch (const IngestError& e) {
        log << "error: " << e.what() << '\n';
        return kExitCompare;
    }
    log << "compare: " << reports.size() << " rankings compared\n";
    return kExitOk;
}

int cmd_fixture(const RunConfig& cfg, std::ostream& log) {
    const auto g = generate_fixture(cfg.seed, cfg.fixture);
    ensure_dir(cfg.out_dir);
    write_corpus(g, cfg.out_dir);
    log << "fixture: seed " << cfg.seed << ", " << g.article_count() << " articles, " << g.citations().size()
        << " citations -> " << cfg.out_dir.string() << '\n';
    return kExitOk;
}

}  // namespace scholrank
