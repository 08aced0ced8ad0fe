#include "scholrank/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "scholrank/parallel.hpp"

namespace scholrank {

void SimilarityCoeffs::validate() const {
    if (alpha_n < 0 || beta_n < 0 || gamma_n < 0) throw WeightingError("similarity coefficients must be >= 0");
    if (!(lambda > 0)) throw WeightingError("lambda must be > 0");
}

void TimeParams::validate() const {
    if (!(hub_base > 0)) throw WeightingError("hub time base must be > 0");
    if (authority_b < 0) throw WeightingError("authority time b must be >= 0");
    if (time_value_p < 0) throw WeightingError("time value p must be >= 0");
}

namespace {

void check_distinct(ArticleId p1, ArticleId p2) {
    if (p1 == p2) throw WeightingError("similarity of an article with itself is undefined");
}

double author_union_ratio(std::span<const AuthorId> a1, std::span<const AuthorId> a2) {
    if (a1.empty() || a2.empty()) return 0.0;
    std::vector<AuthorId> u;
    std::set_union(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(u));
    return static_cast<double>(u.size()) / std::sqrt(static_cast<double>(a1.size()) * static_cast<double>(a2.size()));
}

}  // namespace

double network_similarity(const ScholGraph& g, ArticleId p1, ArticleId p2, const SimilarityCoeffs& c) {
    check_distinct(p1, p2);
    const double cocitation = cosine_overlap(g.neighbors(p1), g.neighbors(p2));
    const double authors = c.author_overlap == AuthorOverlap::Intersection
                               ? cosine_overlap(g.authors_of(p1), g.authors_of(p2))
                               : author_union_ratio(g.authors_of(p1), g.authors_of(p2));
    const auto j1 = g.journal_of(p1);
    const double same_journal = (j1 && j1 == g.journal_of(p2)) ? 1.0 : 0.0;
    return c.alpha_n * cocitation + c.beta_n * authors + c.gamma_n * same_journal;
}

double semantic_similarity(const ScholGraph& g, ArticleId p1, ArticleId p2) {
    check_distinct(p1, p2);
    return cosine_overlap(g.topics_of(p1), g.topics_of(p2));
}

double median(std::vector<double> values) {
    if (values.empty()) throw WeightingError("median of an empty population");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double blend_weight(double s_n, double s_s, double tau_n, double tau_s, double lambda) {
    return std::exp(lambda * (s_n - tau_n)) * s_n + std::exp(lambda * (s_s - tau_s)) * s_s;
}

EdgeWeights compute_edge_weights(const ScholGraph& g, const SimilarityCoeffs& c, unsigned workers) {
    c.validate();
    const auto cites = g.citations();
    if (cites.empty()) throw WeightingError("graph has no citation edges");

    EdgeWeights w;
    w.s_n.resize(cites.size());
    w.s_s.resize(cites.size());
    w.s.resize(cites.size());
    parallel_for(cites.size(), workers, [&](std::size_t e) {
        w.s_n[e] = network_similarity(g, cites[e].citing, cites[e].cited, c);
        w.s_s[e] = semantic_similarity(g, cites[e].citing, cites[e].cited);
    });
    w.tau_n = median(w.s_n);
    w.tau_s = median(w.s_s);
    parallel_for(cites.size(), workers,
                 [&](std::size_t e) { w.s[e] = blend_weight(w.s_n[e], w.s_s[e], w.tau_n, w.tau_s, c.lambda); });
    return w;
}

double hub_time_weight(int delta_years, const TimeParams& tp) {
    const double sign = tp.hub_direction == HubTimeDirection::Decay ? -1.0 : 1.0;
    return std::pow(tp.hub_base, sign * delta_years);
}

double authority_time_weight(int delta_years, const TimeParams& tp) {
    return 1.0 / (1.0 + tp.authority_b * delta_years);
}

double time_value(int delta_years, const TimeParams& tp) { return std::exp(-tp.time_value_p * delta_years); }

void write_edge_weights(const std::filesystem::path& path, const ScholGraph& g, const EdgeWeights& w) {
    std::ofstream out(path);
    if (!out) throw WeightingError("cannot write " + path.string());
    out << "citing_id\tcited_id\ts_n\ts_s\ts\n";
    char buf[128];
    const auto cites = g.citations();
    for (std::size_t e = 0; e < w.size(); ++e) {
        std::snprintf(buf, sizeof buf, "\t%.17g\t%.17g\t%.17g\n", w.s_n[e], w.s_s[e], w.s[e]);
        out << g.article(cites[e].citing).external_id << '\t' << g.article(cites[e].cited).external_id << buf;
    }
}

}  // namespace scholrank
