// Acceptance suite: one PASS/FAIL/SKIP line per criterion, with tolerances and time budgets pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "scholrank/commands.hpp"
#include "scholrank/eval.hpp"
#include "scholrank/ingest.hpp"
#include "scholrank/ranking.hpp"
#include "scholrank/weighting.hpp"

using namespace scholrank;
namespace fs = std::filesystem;

namespace {

// Tolerances
constexpr double kHubSumTol = 1e-9;
constexpr double kAuthoritySumTol = 1e-6;
constexpr double kFixedPointTol = 1e-7;
constexpr double kSpearmanTol = 1e-12;
constexpr double kSymmetryTol = 1e-9;
constexpr double kWeightTol = 1e-12;
constexpr double kOracleTieGap = 1e-12;  // oracle scores closer than this count as tied

struct Outcome {
    enum Status { Pass, Fail, Skip } status = Pass;
    std::string detail;
};

struct Criterion {
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
};

Outcome fail(std::string why) { return {Outcome::Fail, std::move(why)}; }
Outcome pass(std::string what) { return {Outcome::Pass, std::move(what)}; }

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

EdgeWeights weights_or_empty(const ScholGraph& g, const SimilarityCoeffs& c = {}) {
    return g.citations().empty() ? EdgeWeights{} : compute_edge_weights(g, c);
}

std::map<std::string, double> authority_by_id(const ScholGraph& g, const RankReport& r) {
    std::map<std::string, double> out;
    for (const auto& a : r.ranked) out[g.article(a.id).external_id] = a.authority;
    return out;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---------------------------------------------------------------------------

Outcome normalization_invariants() {
    std::mt19937_64 rng(2024);
    std::size_t iterations = 0;
    double worst_hub = 0, worst_as = 0;
    const auto table = presets();
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        FixtureParams p;
        p.n_articles = 1 + rng() % 200;
        p.n_authors = 1 + rng() % 120;
        p.n_journals = rng() % 12;
        p.n_topics = rng() % 40;
        p.citation_prob = std::uniform_real_distribution<double>(0.0, 0.1)(rng);
        p.journal_prob = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto g = generate_fixture(seed, p);
        const auto w = weights_or_empty(g);
        RankOptions opts;
        bool negative = false;
        opts.on_iteration = [&](const RankState& st) {
            ++iterations;
            worst_as = std::max(worst_as, std::abs(sum(st.authority) - 1));
            for (const auto* v : {&st.hubs.author, &st.hubs.journal, &st.hubs.topic, &st.hubs.article}) {
                if (!v->empty()) worst_hub = std::max(worst_hub, std::abs(sum(*v) - 1));
                for (double x : *v) negative = negative || x < 0;
            }
            for (double x : st.authority) negative = negative || x < 0;
        };
        run_ranking(g, w, table[seed % table.size()], {}, opts);
        if (negative) return fail("negative entry on fixture seed " + std::to_string(seed));
    }
    if (worst_hub > kHubSumTol) return fail("hub sum off by " + fmt("%.3g", worst_hub));
    if (worst_as > kAuthoritySumTol) return fail("authority sum off by " + fmt("%.3g", worst_as));
    return pass("200 fixtures, " + std::to_string(iterations) + " iterations; max hub sum error " +
                fmt("%.2g", worst_hub) + ", max AS sum error " + fmt("%.2g", worst_as));
}

Outcome fixed_point_oracle() {
    std::mt19937_64 rng(77);
    double worst = 0;
    int runs = 0;
    const auto table = presets();
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        FixtureParams p;
        p.n_articles = 2 + rng() % 49;  // 2..50
        p.n_authors = 1 + rng() % 30;
        p.n_journals = rng() % 6;
        p.n_topics = rng() % 20;
        p.citation_prob = std::uniform_real_distribution<double>(0.02, 0.25)(rng);
        const auto g = generate_fixture(seed, p);
        const auto in = g.to_input();

        SimilarityCoeffs sc;
        TimeParams tp;
        oracle::Params prm;
        if (seed % 3 == 0) {
            sc.author_overlap = AuthorOverlap::Union;
            prm.union_authors = true;
        }
        if (seed % 4 == 0) {
            tp.hub_direction = HubTimeDirection::Growth;
            prm.hub_growth = true;
        }
        const auto w = weights_or_empty(g, sc);
        for (std::size_t k = 0; k < table.size(); k += (seed % 2 ? 1 : 3)) {
            Setting s = table[k];
            s.max_iters = 5000;
            s.tol = 1e-14;
            const auto lib = authority_by_id(g, run_ranking(g, w, s, tp));
            const auto ref = oracle::fixed_point(in, g.t_current(), {s.alpha, s.beta, s.gamma, s.delta, s.omega, s.sigma},
                                                 prm, 5000, 1e-14);
            for (const auto& [id, v] : ref) worst = std::max(worst, std::abs(v - lib.at(id)));
            ++runs;
        }
    }
    if (worst > kFixedPointTol) return fail("L_inf " + fmt("%.3g", worst) + " over " + std::to_string(runs) + " runs");
    return pass(std::to_string(runs) + " fixture/setting runs, max L_inf " + fmt("%.2g", worst));
}

// Pairs ordered one way by the library and strictly the other way by the oracle.
std::size_t discordant(const ScholGraph& g, const RankReport& r, const std::map<std::string, double>& ref) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < r.ranked.size(); ++i) {
        const double hi = ref.at(g.article(r.ranked[i].id).external_id);
        for (std::size_t j = i + 1; j < r.ranked.size(); ++j) {
            if (ref.at(g.article(r.ranked[j].id).external_id) - hi > kOracleTieGap) ++bad;
        }
    }
    return bad;
}

Outcome pagerank_reduction() {
    std::mt19937_64 rng(5);
    std::size_t worst = 0, pairs = 0, discord_89 = 0;
    Setting pr = load_preset("PR");
    pr.max_iters = 10000;
    pr.tol = 1e-15;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        FixtureParams p;
        p.n_articles = 10 + rng() % 141;
        p.citation_prob = std::uniform_real_distribution<double>(0.01, 0.1)(rng);
        p.year_min = p.year_max = 2020;
        const auto g = generate_fixture(seed, p);
        if (g.citations().empty()) continue;
        const auto report = run_ranking(g, compute_edge_weights(g), pr, {});
        const auto in = g.to_input();
        const auto w = oracle::edge_weights(in, {});
        // with uniform years the time vector is uniform and joins the jump: AS = 0.8 PR + 0.2/N
        worst = std::max(worst, discordant(g, report, oracle::damped_pagerank(in, w, 0.8, 10000, 1e-15)));
        discord_89 += discordant(g, report, oracle::damped_pagerank(in, w, 8.0 / 9.0, 10000, 1e-15));
        pairs += g.article_count() * (g.article_count() - 1) / 2;
    }
    const std::string info = "; damping 8/9 would give " + std::to_string(discord_89) + " discordant pairs";
    if (worst > 0) return fail("Kendall distance " + std::to_string(worst) + info);
    return pass("Kendall distance 0 over " + std::to_string(pairs) + " pairs (damping 0.8)" + info);
}

// Every weak ordering of n items, as level vectors.
std::vector<std::vector<double>> weak_orderings(int n) {
    std::vector<std::vector<double>> out;
    std::vector<int> level(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<bool> used(n, false);
            int top = -1;
            for (int x : level) used[x] = true, top = std::max(top, x);
            for (int k = 0; k <= top; ++k) {
                if (!used[k]) return;
            }
            out.emplace_back(level.begin(), level.end());
            return;
        }
        for (int v = 0; v < n; ++v) {
            level[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Ranking as_ranking(const std::vector<double>& scores) {
    std::vector<ScoredItem> items;
    for (std::size_t i = 0; i < scores.size(); ++i) items.push_back({std::string(1, char('a' + i)), scores[i]});
    return Ranking("r", std::move(items));
}

Outcome spearman_oracle() {
    std::size_t checked = 0, degenerate = 0;
    double worst = 0;
    for (int n = 2; n <= 7; ++n) {
        const auto all = weak_orderings(n);
        // tie compositions in item order: every pair of weak orderings is a relabelling of (composition, ordering)
        std::vector<std::vector<double>> comps;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<double> s(n);
            double block = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && (mask >> (i - 1) & 1u)) block += 1;
                s[i] = -block;
            }
            comps.push_back(std::move(s));
        }
        std::vector<Ranking> right;
        for (const auto& s : all) right.push_back(as_ranking(s));
        for (const auto& c : comps) {
            const auto left = as_ranking(c);
            for (std::size_t k = 0; k < all.size(); ++k) {
                const auto got = spearman(left, right[k]);
                const double want = oracle::spearman(c, all[k]);
                ++checked;
                if (std::isnan(want) || !got) {
                    if (std::isnan(want) != !got) return fail("degenerate mismatch at n=" + std::to_string(n));
                    ++degenerate;
                    continue;
                }
                worst = std::max(worst, std::abs(*got - want));
            }
        }
    }
    if (worst > kSpearmanTol) return fail("max error " + fmt("%.3g", worst));
    return pass(std::to_string(checked) + " pairs (" + std::to_string(degenerate) + " undefined), max error " +
                fmt("%.2g", worst));
}

GraphInput uniform_metadata(int n, const std::vector<std::pair<int, int>>& arcs) {
    GraphInput in;
    in.authors = {{"u1", ""}, {"u2", ""}};
    in.journals = {{"j", ""}};
    in.topics = {{"t1", "T116", ""}, {"t2", "T047", ""}};
    auto id = [](int i) { return "P" + std::to_string(i); };
    for (int i = 0; i < n; ++i) {
        in.articles.push_back({id(i), "", 2020, true, 10});
        for (auto u : {"u1", "u2"}) in.edges.authorship.emplace_back(id(i), u);
        in.edges.publication.emplace_back(id(i), "j");
        for (auto t : {"t1", "t2"}) in.edges.topicality.emplace_back(id(i), t);
    }
    for (auto [a, b] : arcs) in.edges.citations.emplace_back(id(a), id(b));
    return in;
}

Outcome symmetry() {
    std::vector<std::pair<std::string, GraphInput>> graphs;
    auto circulant = [](int n, std::vector<int> steps) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i) {
            for (int s : steps) arcs.emplace_back(i, (i + s) % n);
        }
        return arcs;
    };
    graphs.emplace_back("directed 5-cycle", uniform_metadata(5, circulant(5, {1})));
    graphs.emplace_back("bidirectional 6-cycle", uniform_metadata(6, circulant(6, {1, 5})));
    graphs.emplace_back("complete digraph K4", uniform_metadata(4, circulant(4, {1, 2, 3})));
    graphs.emplace_back("circulant C8(1,3)", uniform_metadata(8, circulant(8, {1, 3})));
    graphs.emplace_back("edgeless 4", uniform_metadata(4, {}));
    double worst = 0;
    for (const auto& [name, in] : graphs) {
        const auto g = build_graph(in);
        const auto w = weights_or_empty(g);
        for (const auto& s : presets()) {
            const auto r = run_ranking(g, w, s, {});
            for (const auto& a : r.ranked) {
                worst = std::max(worst, std::abs(a.authority - 1.0 / double(g.article_count())));
            }
        }
    }
    if (worst > kSymmetryTol) return fail("max deviation from uniform " + fmt("%.3g", worst));
    return pass(std::to_string(graphs.size()) + " graphs x 20 presets, max deviation " + fmt("%.2g", worst));
}

GraphInput random_small_input(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::bernoulli_distribution coin(0.4);
    GraphInput in;
    const int n = pick(2, 8), na = pick(0, 4), nj = pick(0, 3), nt = pick(0, 5);
    for (int i = 0; i < n; ++i) in.articles.push_back({"P" + std::to_string(i), "", pick(2010, 2020), false, 0});
    for (int i = 0; i < na; ++i) in.authors.push_back({"A" + std::to_string(i), ""});
    for (int i = 0; i < nj; ++i) in.journals.push_back({"J" + std::to_string(i), ""});
    for (int i = 0; i < nt; ++i) in.topics.push_back({"T" + std::to_string(i), "T116", ""});
    for (int i = 0; i < n; ++i) {
        const auto p = "P" + std::to_string(i);
        for (int j = 0; j < n; ++j) {
            if (j != i && coin(rng)) in.edges.citations.emplace_back(p, "P" + std::to_string(j));
        }
        for (int a = 0; a < na; ++a) {
            if (coin(rng)) in.edges.authorship.emplace_back(p, "A" + std::to_string(a));
        }
        if (nj > 0 && coin(rng)) in.edges.publication.emplace_back(p, "J" + std::to_string(pick(0, nj - 1)));
        for (int t = 0; t < nt; ++t) {
            if (coin(rng)) in.edges.topicality.emplace_back(p, "T" + std::to_string(t));
        }
    }
    if (in.edges.citations.empty()) in.edges.citations.emplace_back("P0", "P1");
    return in;
}

bool close(double got, double want) { return std::abs(got - want) <= kWeightTol * std::max(1.0, std::abs(want)); }

Outcome weight_formulas() {
    const SimilarityCoeffs dc;
    const TimeParams dt;
    if (dc.alpha_n != 0.6 || dc.beta_n != 0.3 || dc.gamma_n != 0.1 || dc.lambda != 6.0 || dt.hub_base != 2.0 ||
        dt.authority_b != 1.0) {
        return fail("default constants differ from 0.6/0.3/0.1, lambda 6, a 2, b 1");
    }
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t values = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto in = random_small_input(rng);
        const auto g = build_graph(in);
        SimilarityCoeffs c;
        oracle::Params prm;
        if (trial % 2) {
            c.alpha_n = prm.alpha_n = unit(rng);
            c.beta_n = prm.beta_n = unit(rng);
            c.gamma_n = prm.gamma_n = unit(rng);
            c.lambda = prm.lambda = 0.5 + 9.5 * unit(rng);
        }
        if (trial % 5 == 0) {
            c.author_overlap = AuthorOverlap::Union;
            prm.union_authors = true;
        }
        for (const auto& a : in.articles) {
            for (const auto& b : in.articles) {
                if (a.external_id == b.external_id) continue;
                const auto pa = *g.find_article(a.external_id), pb = *g.find_article(b.external_id);
                if (!close(network_similarity(g, pa, pb, c), oracle::network_similarity(in, a.external_id, b.external_id, prm)) ||
                    !close(semantic_similarity(g, pa, pb), oracle::semantic_similarity(in, a.external_id, b.external_id))) {
                    return fail("similarity mismatch in trial " + std::to_string(trial));
                }
                values += 2;
            }
        }
        const auto lib = compute_edge_weights(g, c);
        const auto ref = oracle::edge_weights(in, prm);
        if (!close(lib.tau_n, ref.tau_n) || !close(lib.tau_s, ref.tau_s)) return fail("median mismatch in trial " + std::to_string(trial));
        for (std::size_t e = 0; e < lib.size(); ++e) {
            const auto& cit = g.citations()[e];
            const std::pair key{g.article(cit.citing).external_id, g.article(cit.cited).external_id};
            if (!close(lib.s_n[e], ref.s_n.at(key)) || !close(lib.s_s[e], ref.s_s.at(key)) || !close(lib.s[e], ref.s.at(key))) {
                return fail("edge weight mismatch in trial " + std::to_string(trial));
            }
            values += 3;
        }

        TimeParams tp;
        tp.hub_base = 1.0 + 3.0 * unit(rng);
        tp.authority_b = 3.0 * unit(rng);
        tp.time_value_p = unit(rng);
        const int d = static_cast<int>(rng() % 61);
        if (!close(hub_time_weight(d, tp), std::pow(tp.hub_base, -d)) ||
            !close(authority_time_weight(d, tp), 1.0 / (1.0 + tp.authority_b * d)) ||
            !close(time_value(d, tp), std::exp(-tp.time_value_p * d))) {
            return fail("time weight mismatch in trial " + std::to_string(trial));
        }
        tp.hub_direction = HubTimeDirection::Growth;
        if (!close(hub_time_weight(d, tp), std::pow(tp.hub_base, d))) return fail("growth time weight mismatch");
        values += 4;
    }
    return pass("1000 random inputs, " + std::to_string(values) + " values within 1e-12; defaults 0.6/0.3/0.1, lambda 6, a 2, b 1");
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        files[e.path().filename().string()] = ss.str();
    }
    return files;
}

Outcome determinism() {
    const auto dir = fs::temp_directory_path() / "scholrank_acceptance_determinism";
    fs::remove_all(dir);
    FixtureParams p;
    p.n_articles = 2500;
    p.n_authors = 900;
    p.n_journals = 40;
    p.n_topics = 300;
    p.citation_prob = 0.002;
    write_corpus(generate_fixture(42, p), dir / "corpus");

    RunConfig cfg;
    cfg.corpus = CorpusPaths::in_directory(dir / "corpus");
    cfg.ingest.min_citation_threshold = 3;
    cfg.presets = {"PR", "PR_author_journal_article_topic", "Topic Dominated"};
    cfg.dump_weights = true;
    cfg.out_dir = dir / "out";
    std::ostringstream log;
    if (cmd_ingest(cfg, log) != kExitOk) return fail("ingest failed: " + log.str());

    std::vector<std::map<std::string, std::string>> runs;
    for (unsigned workers : {1u, 1u, 4u, 3u}) {
        cfg.workers = workers;
        if (cmd_rank(cfg, log) != kExitOk || cmd_compare(cfg, log) != kExitOk) return fail("run failed: " + log.str());
        runs.push_back(snapshot(cfg.out_dir));
    }
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i] != runs[0]) return fail("outputs of run " + std::to_string(i + 1) + " differ from run 1");
    }
    fs::remove_all(dir);
    return pass(std::to_string(runs[0].size()) + " output files byte-identical over 4 runs (workers 1, 1, 4, 3)");
}

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

Outcome ingest_filters() {
    const auto dir = fs::temp_directory_path() / "scholrank_acceptance_ingest";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string ah = "article_external_id\tauthor_external_id\tauthor_name\n";
    const std::string ch = "citing_external_id\tcited_external_id\n";
    const std::string nh = "article_external_id\tcui\ttype_id\tpreferred_name\taccuracy\n";
    const std::string arth = "external_id\ttitle\tyear\tjournal_external_id\tcitation_count_raw\n";

    // every listed type id exactly once, all above the accuracy threshold
    std::string anns = nh;
    std::set<std::string> expect_cuis;
    for (const auto& t : default_retained_types()) {
        anns += "A\tC" + t.type_id + "\t" + t.type_id + "\t" + t.description + "\t0.9\n";
        expect_cuis.insert("C" + t.type_id);
    }
    for (const auto& t : default_discarded_types()) anns += "A\tC" + t.type_id + "\t" + t.type_id + "\t" + t.description + "\t0.9\n";
    write_text(dir / "articles.tsv", arth + "A\ta\t2020\t\t50\n");
    write_text(dir / "authorship.tsv", ah);
    write_text(dir / "citations.tsv", ch);
    write_text(dir / "annotations.tsv", anns);
    IngestSummary summary;
    const auto g = parse_corpus(CorpusPaths::in_directory(dir), IngestConfig::defaults(), &summary);
    std::set<std::string> got;
    for (const auto& t : g.topics()) got.insert(t.cui);
    if (got != expect_cuis) return fail("kept topics differ from the retained table");
    if (summary.get("annotations_discarded_type") != default_discarded_types().size()) {
        return fail("discarded count " + std::to_string(summary.get("annotations_discarded_type")));
    }

    // accuracy boundary
    const auto cfg = IngestConfig::defaults();
    const std::vector<TopicAnnotation> edge{{"A", "X1", "T116", "", 0.75}, {"A", "X2", "T116", "", 0.7499999}};
    const auto kept = filter_annotations(edge, cfg);
    if (kept.size() != 1 || kept[0].cui != "X1") return fail("accuracy threshold boundary");

    // min-citation cut against a hand-filtered expectation
    write_text(dir / "articles.tsv", arth +
                                         "A\t\t2018\tj2\t25\n"
                                         "B\t\t2019\tj1\t3\n"
                                         "C\t\t2020\tj2\t40\n"
                                         "D\t\t2020\t\t20\n"
                                         "E\t\t2017\tj3\t19\n"
                                         "F\t\t2021\t\t0\n");
    write_text(dir / "authorship.tsv", ah + "A\tu1\t\nB\tu1\t\nB\tu2\t\nE\tu3\t\nD\tu4\t\n");
    write_text(dir / "citations.tsv", ch + "C\tA\nB\tA\nC\tB\nD\tC\nE\tD\nF\tA\nA\tD\n");
    write_text(dir / "annotations.tsv", nh + "E\tCt\tT116\t\t1\nA\tCa\tT047\t\t1\n");
    const auto cut = subgraph_by_min_citations(parse_corpus(CorpusPaths::in_directory(dir), cfg), 20);
    const auto in = cut.to_input();
    std::set<std::string> arts, auths, jours, tops;
    for (const auto& a : in.articles) arts.insert(a.external_id);
    for (const auto& a : in.authors) auths.insert(a.external_id);
    for (const auto& j : in.journals) jours.insert(j.external_id);
    for (const auto& t : in.topics) tops.insert(t.cui);
    const std::set<std::pair<std::string, std::string>> cites(in.edges.citations.begin(), in.edges.citations.end());
    if (arts != std::set<std::string>{"A", "C", "D"}) return fail("articles after cut");
    if (cites != std::set<std::pair<std::string, std::string>>{{"C", "A"}, {"D", "C"}, {"A", "D"}}) return fail("citations after cut");
    if (auths != std::set<std::string>{"u1", "u4"}) return fail("authors after cut");
    if (jours != std::set<std::string>{"j2"}) return fail("journals after cut");
    if (tops != std::set<std::string>{"Ca"}) return fail("topics after cut");
    if (cut.t_current() != 2021) return fail("t_current after cut");
    fs::remove_all(dir);
    return pass(std::to_string(default_retained_types().size()) + " retained and " +
                std::to_string(default_discarded_types().size()) + " discarded type ids; cut matches the hand-filtered graph");
}

Outcome dataset_reproduction() {
    const char* env = std::getenv("SCHOLRANK_CORD19_DIR");
    if (!env || !*env) return {Outcome::Skip, "set SCHOLRANK_CORD19_DIR to a prepared corpus directory to run"};
    const auto full = parse_corpus(CorpusPaths::in_directory(env), IngestConfig::cord19_profile());
    const auto g = subgraph_by_min_citations(full, 20);
    const auto w = compute_edge_weights(g, {}, 8);
    RankOptions opts;
    opts.workers = 8;
    std::map<std::string, Ranking> r;
    for (const auto* name : {"PR", "Topic Dominated", "PR_journal", "PR_article_topic", "Author Dominated"}) {
        r[name] = ranking_from_report(run_ranking(g, w, load_preset(name), {}, opts), g);
    }
    const double pr_cit = citation_correlation(r["PR"], g).value_or(NAN);
    const double topic_cit = citation_correlation(r["Topic Dominated"], g).value_or(NAN);
    const double pr_journal = spearman(r["PR"], r["PR_journal"]).value_or(NAN);
    const double pr_art_topic = spearman(r["PR"], r["PR_article_topic"]).value_or(NAN);
    const auto overlap = static_cast<double>(topk_overlap(r["Author Dominated"], r["Topic Dominated"], 100));
    std::string detail = std::to_string(g.article_count()) + " articles; PR~cit " + fmt("%.4f", pr_cit) +
                         ", Topic~cit " + fmt("%.4f", topic_cit) + ", PR~PR_journal " + fmt("%.4f", pr_journal) +
                         ", PR~PR_article_topic " + fmt("%.4f", pr_art_topic) + ", Author/Topic top-100 " +
                         fmt("%.0f", overlap);
    const bool ok = std::abs(pr_cit - 0.6151) <= 0.05 && std::abs(topic_cit - 0.2525) <= 0.05 &&
                    std::abs(pr_journal - 0.62) <= 0.05 && std::abs(pr_art_topic - 0.41) <= 0.05 &&
                    std::abs(overlap - 84) <= 10;
    return {ok ? Outcome::Pass : Outcome::Fail, detail};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"normalization invariants", 10, normalization_invariants},
        {"fixed-point oracle", 5, fixed_point_oracle},
        {"PageRank reduction", 2, pagerank_reduction},
        {"Spearman oracle", 5, spearman_oracle},
        {"symmetry", 2, symmetry},
        {"weight formulas", 2, weight_formulas},
        {"determinism", 5, determinism},
        {"ingest filters", 1, ingest_filters},
        {"dataset reproduction (optional)", 1800, dataset_reproduction},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.status == Outcome::Pass && secs > c.budget_s) {
            out = fail(out.detail + "; over the " + fmt("%.0f", c.budget_s) + " s budget");
        }
        const char* tag = out.status == Outcome::Pass ? "PASS" : out.status == Outcome::Skip ? "SKIP" : "FAIL";
        std::printf("%s  %-32s %7.3f s  %s\n", tag, c.name.c_str(), secs, out.detail.c_str());
        failures += out.status == Outcome::Fail;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
