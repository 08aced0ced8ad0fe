#include "scholrank/ranking.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "scholrank/parallel.hpp"

namespace scholrank {

namespace {

// Coefficient sums like 0.2+0.1+0.1+0.3+0.2+0.1 land a few ulps above 1.
constexpr double kSumSlack = 1e-12;

double ordered_sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void scale(std::vector<double>& v, double factor) {
    for (auto& x : v) x *= factor;
}

/// Scales v to sum 1. A zero vector becomes uniform; `has_links` says whether that deserves a warning.
void normalize_or_uniform(std::vector<double>& v, bool has_links, std::string_view what, RankWarnings* warnings) {
    if (v.empty()) return;
    const double sum = ordered_sum(v);
    if (sum > 0 && std::isfinite(sum)) {
        scale(v, 1.0 / sum);
        return;
    }
    std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(v.size()));
    if (has_links && warnings) warnings->add(std::string(what) + ": all weighted scores are zero, using uniform");
}

template <class Id>
std::vector<double> hub_class(const ScholGraph& g, std::size_t count, std::span<const double> weighted_authority,
                              unsigned workers) {
    std::vector<double> h(count, 0.0);
    parallel_for(count, workers, [&](std::size_t i) {
        const auto rows = g.articles_of(Id{static_cast<std::uint32_t>(i)});
        if (rows.empty()) return;
        double acc = 0;
        for (auto p : rows) acc += weighted_authority[p.value];
        h[i] = acc / static_cast<double>(rows.size());
    });
    return h;
}

template <class Neighbours>
std::vector<double> transfer(const ScholGraph& g, std::span<const double> hub, std::span<const double> age_weight,
                             Neighbours neighbours, unsigned workers) {
    std::vector<double> v(g.article_count(), 0.0);
    parallel_for(v.size(), workers, [&](std::size_t i) {
        double acc = 0;
        for (auto n : neighbours(ArticleId{static_cast<std::uint32_t>(i)})) acc += hub[n.value];
        v[i] = age_weight[i] * acc;
    });
    return v;
}

}  // namespace

void RankWarnings::add(std::string msg) {
    if (std::find(messages.begin(), messages.end(), msg) == messages.end()) messages.push_back(std::move(msg));
}

double Setting::jump_mass() const { return std::max(0.0, 1.0 - coefficient_sum()); }

void Setting::validate() const {
    const std::array coeffs{alpha, beta, gamma, delta, omega, sigma};
    for (double c : coeffs) {
        if (!(c >= 0) || !std::isfinite(c)) throw RankingError("setting '" + name + "': coefficients must be >= 0");
    }
    if (coefficient_sum() > 1.0 + kSumSlack) {
        throw RankingError("setting '" + name + "': coefficients sum to " + std::to_string(coefficient_sum()) +
                           " > 1");
    }
    if (max_iters < 1) throw RankingError("setting '" + name + "': max_iters must be >= 1");
    if (!(tol > 0)) throw RankingError("setting '" + name + "': tol must be > 0");
}

HubScores update_hub_scores(const ScholGraph& g, std::span<const double> authority, const TimeParams& tp,
                            unsigned workers, RankWarnings* warnings) {
    const std::size_t n = g.article_count();
    if (authority.size() != n) throw RankingError("authority vector size does not match article count");

    std::vector<double> weighted(n);
    for (std::size_t p = 0; p < n; ++p) {
        weighted[p] = hub_time_weight(g.age(ArticleId{static_cast<std::uint32_t>(p)}), tp) * authority[p];
    }

    HubScores h;
    h.author = hub_class<AuthorId>(g, g.author_count(), weighted, workers);
    h.journal = hub_class<JournalId>(g, g.journal_count(), weighted, workers);
    h.topic = hub_class<TopicId>(g, g.topic_count(), weighted, workers);
    h.article.assign(n, 0.0);
    parallel_for(n, workers, [&](std::size_t i) {
        const auto nbrs = g.neighbors(ArticleId{static_cast<std::uint32_t>(i)});
        if (nbrs.empty()) return;
        double acc = 0;
        for (auto q : nbrs) acc += weighted[q.value];
        h.article[i] = acc / static_cast<double>(nbrs.size());
    });

    bool has_authorship = false, has_publication = false, has_topicality = false;
    for (std::uint32_t p = 0; p < n; ++p) {
        has_authorship = has_authorship || !g.authors_of(ArticleId{p}).empty();
        has_publication = has_publication || g.journal_of(ArticleId{p}).has_value();
        has_topicality = has_topicality || !g.topics_of(ArticleId{p}).empty();
    }
    normalize_or_uniform(h.author, has_authorship, "author hubs", warnings);
    normalize_or_uniform(h.journal, has_publication, "journal hubs", warnings);
    normalize_or_uniform(h.topic, has_topicality, "topic hubs", warnings);
    normalize_or_uniform(h.article, !g.citations().empty(), "article hubs", warnings);
    return h;
}

std::vector<double> pagerank_term(const ScholGraph& g, const EdgeWeights& weights, std::span<const double> authority,
                                  unsigned workers) {
    const std::size_t n = g.article_count();
    if (authority.size() != n) throw RankingError("authority vector size does not match article count");
    if (weights.size() != g.citations().size()) throw RankingError("edge weights do not match the citation list");
    if (n == 0) return {};

    std::vector<double> out_weight(n, 0.0);
    for (std::uint32_t p = 0; p < n; ++p) {
        double acc = 0;
        for (auto e : g.out_edges(ArticleId{p})) acc += weights.s[e];
        out_weight[p] = acc;
    }
    double dangling = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (!(out_weight[p] > 0)) dangling += authority[p];
    }
    const double spread = dangling / static_cast<double>(n);

    const auto cites = g.citations();
    std::vector<double> pr(n, 0.0);
    parallel_for(n, workers, [&](std::size_t i) {
        double acc = 0;
        for (auto e : g.in_edges(ArticleId{static_cast<std::uint32_t>(i)})) {
            const auto src = cites[e].citing.value;
            if (out_weight[src] > 0) acc += weights.s[e] / out_weight[src] * authority[src];
        }
        pr[i] = acc + spread;
    });
    const double sum = ordered_sum(pr);
    if (sum > 0) scale(pr, 1.0 / sum);
    return pr;
}

AuthorityContributions authority_contributions(const ScholGraph& g, const HubScores& hubs, const TimeParams& tp,
                                               unsigned workers, RankWarnings* warnings) {
    const std::size_t n = g.article_count();
    std::vector<double> age_weight(n), time(n);
    for (std::uint32_t p = 0; p < n; ++p) {
        age_weight[p] = authority_time_weight(g.age(ArticleId{p}), tp);
        time[p] = time_value(g.age(ArticleId{p}), tp);
    }

    AuthorityContributions c;
    c.author = transfer(g, hubs.author, age_weight, [&](ArticleId p) { return g.authors_of(p); }, workers);
    c.journal.assign(n, 0.0);
    for (std::uint32_t p = 0; p < n; ++p) {
        if (auto j = g.journal_of(ArticleId{p})) c.journal[p] = age_weight[p] * hubs.journal[j->value];
    }
    c.topic = transfer(g, hubs.topic, age_weight, [&](ArticleId p) { return g.topics_of(p); }, workers);
    c.article = transfer(g, hubs.article, age_weight, [&](ArticleId p) { return g.neighbors(p); }, workers);

    normalize_or_uniform(c.author, true, "author transfers", warnings);
    normalize_or_uniform(c.journal, true, "journal transfers", warnings);
    normalize_or_uniform(c.topic, true, "topic transfers", warnings);
    normalize_or_uniform(c.article, true, "article transfers", warnings);
    normalize_or_uniform(time, true, "time values", warnings);
    c.time = std::move(time);
    return c;
}

RankReport run_ranking(const ScholGraph& g, const EdgeWeights& weights, const Setting& s, const TimeParams& tp,
                       const RankOptions& opts) {
    s.validate();
    tp.validate();

    RankReport report;
    report.setting = s.name;
    const std::size_t n = g.article_count();
    if (n == 0) {
        report.converged = true;
        return report;
    }

    RankWarnings warnings;
    RankState state;
    state.authority.assign(n, 1.0 / static_cast<double>(n));
    const double jump = s.jump_mass() / static_cast<double>(n);

    std::vector<double> pr;
    AuthorityContributions parts;
    std::vector<double> next(n);
    for (int it = 1; it <= s.max_iters; ++it) {
        state.hubs = update_hub_scores(g, state.authority, tp, opts.workers, &warnings);
        parts = authority_contributions(g, state.hubs, tp, opts.workers, &warnings);
        pr = pagerank_term(g, weights, state.authority, opts.workers);

        for (std::size_t i = 0; i < n; ++i) {
            next[i] = s.alpha * pr[i] + s.beta * parts.author[i] + s.gamma * parts.journal[i] +
                      s.delta * parts.topic[i] + s.omega * parts.article[i] + s.sigma * parts.time[i] + jump;
        }
        if (opts.renormalize) {
            const double sum = ordered_sum(next);
            if (sum > 0) scale(next, 1.0 / sum);
        }
        double delta = 0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - state.authority[i]);

        state.authority.swap(next);
        state.iteration = it;
        state.last_delta = delta;
        if (opts.on_iteration) opts.on_iteration(state);
        if (delta < s.tol) {
            report.converged = true;
            break;
        }
    }
    report.iterations = state.iteration;
    report.last_delta = state.last_delta;
    if (!report.converged) {
        char delta[32];
        std::snprintf(delta, sizeof delta, "%.3g", state.last_delta);
        warnings.add("setting '" + s.name + "' did not converge within " + std::to_string(s.max_iters) +
                     " iterations (last L1 delta " + delta + ")");
    }

    report.ranked.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        report.ranked[i] = RankedArticle{ArticleId{i},
                                         state.authority[i],
                                         s.alpha * pr[i],
                                         s.beta * parts.author[i],
                                         s.gamma * parts.journal[i],
                                         s.delta * parts.topic[i],
                                         s.omega * parts.article[i],
                                         s.sigma * parts.time[i]};
    }
    // article indices follow external id order, so index breaks ties by external id
    std::stable_sort(report.ranked.begin(), report.ranked.end(), [](const RankedArticle& a, const RankedArticle& b) {
        if (a.authority != b.authority) return a.authority > b.authority;
        return a.id < b.id;
    });
    report.warnings = std::move(warnings.messages);
    return report;
}

namespace {

Setting row(const char* name, double a, double b, double c, double d, double w, double s) {
    return Setting{name, a, b, c, d, w, s};
}

const std::vector<Setting>& preset_table() {
    static const std::vector<Setting> table{
        row("PR", 0.8, 0.0, 0.0, 0.0, 0.0, 0.1),
        row("PR_author", 0.5, 0.3, 0.0, 0.0, 0.0, 0.1),
        row("PR_journal", 0.5, 0.0, 0.3, 0.0, 0.0, 0.1),
        row("PR_article", 0.5, 0.0, 0.0, 0.0, 0.3, 0.1),
        row("PR_author_journal", 0.4, 0.2, 0.2, 0.0, 0.0, 0.1),
        row("PR_author_article", 0.4, 0.2, 0.0, 0.0, 0.2, 0.1),
        row("PR_journal_article", 0.4, 0.0, 0.2, 0.0, 0.2, 0.1),
        row("PR_author_journal_article", 0.2, 0.2, 0.2, 0.0, 0.2, 0.1),
        row("PR_topic", 0.5, 0.0, 0.0, 0.3, 0.0, 0.1),
        row("PR_author_topic", 0.3, 0.2, 0.0, 0.3, 0.0, 0.1),
        row("PR_journal_topic", 0.3, 0.0, 0.2, 0.3, 0.0, 0.1),
        row("PR_article_topic", 0.3, 0.0, 0.0, 0.3, 0.2, 0.1),
        row("PR_author_journal_topic", 0.2, 0.1, 0.1, 0.3, 0.2, 0.1),
        row("PR_author_article_topic", 0.2, 0.1, 0.0, 0.3, 0.2, 0.1),
        row("PR_journal_article_topic", 0.2, 0.0, 0.1, 0.3, 0.2, 0.1),
        row("PR_author_journal_article_topic", 0.2, 0.133, 0.133, 0.2, 0.133, 0.1),
        row("Topic Dominated", 0.1, 0.0, 0.0, 0.7, 0.0, 0.1),
        row("Author Dominated", 0.1, 0.7, 0.0, 0.0, 0.0, 0.1),
        row("Journal Dominated", 0.1, 0.0, 0.7, 0.0, 0.0, 0.1),
        // the published row repeats the topic column here; the article layer is the one meant to dominate
        row("Article Dominated", 0.1, 0.0, 0.0, 0.0, 0.7, 0.1),
    };
    return table;
}

}  // namespace

std::span<const Setting> presets() { return preset_table(); }

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& s : preset_table()) names.push_back(s.name);
    return names;
}

Setting load_preset(std::string_view name) {
    for (const auto& s : preset_table()) {
        if (s.name == name) return s;
    }
    std::string valid;
    for (const auto& s : preset_table()) valid += (valid.empty() ? "" : ", ") + s.name;
    throw RankingError("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
}

std::string setting_file_stem(std::string_view name) {
    std::string out(name);
    for (auto& ch : out) {
        const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
                        ch == '_' || ch == '-' || ch == '.';
        if (!ok) ch = '_';
    }
    return out;
}

void write_rank_report(const std::filesystem::path& path, const ScholGraph& g, const RankReport& report) {
    std::ofstream out(path);
    if (!out) throw RankingError("cannot write " + path.string());
    out << "rank\texternal_id\tAS\tpr_part\tauthor_part\tjournal_part\ttopic_part\tarticle_part\ttime_part\tconverged\n";
    char buf[256];
    std::size_t rank = 0;
    for (const auto& r : report.ranked) {
        std::snprintf(buf, sizeof buf, "\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%s\n", r.authority,
                      r.pr_part, r.author_part, r.journal_part, r.topic_part, r.article_part, r.time_part,
                      report.converged ? "true" : "false");
        out << ++rank << '\t' << g.article(r.id).external_id << buf;
    }
}

}  // namespace scholrank
