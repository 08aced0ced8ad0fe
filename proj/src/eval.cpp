#include "scholrank/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "scholrank/parallel.hpp"

namespace scholrank {

std::vector<double> tie_averaged_ranks(const std::vector<double>& scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<double> ranks(n);
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo + 1;
        while (hi < n && scores[idx[hi]] == scores[idx[lo]]) ++hi;
        // positions lo+1 .. hi
        const double mean = 0.5 * static_cast<double>(lo + 1 + hi);
        for (std::size_t k = lo; k < hi; ++k) ranks[idx[k]] = mean;
        lo = hi;
    }
    return ranks;
}

Ranking::Ranking(std::string name, std::vector<ScoredItem> items) : name_(std::move(name)), items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(),
              [](const ScoredItem& a, const ScoredItem& b) { return a.external_id < b.external_id; });
    if (auto dup = std::adjacent_find(items_.begin(), items_.end(),
                                      [](const ScoredItem& a, const ScoredItem& b) { return a.external_id == b.external_id; });
        dup != items_.end()) {
        throw EvalError(EvalErrc::BadReport, "ranking '" + name_ + "' lists '" + dup->external_id + "' twice");
    }
    std::vector<double> scores;
    scores.reserve(items_.size());
    for (const auto& it : items_) scores.push_back(it.score);
    positions_ = tie_averaged_ranks(scores);

    std::vector<std::size_t> idx(items_.size());
    std::iota(idx.begin(), idx.end(), 0);
    // items_ is id-sorted, so a stable sort on score leaves ties in id order
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return items_[a].score > items_[b].score; });
    order_.reserve(idx.size());
    for (auto i : idx) order_.push_back(items_[i].external_id);
}

namespace {

void require_same_universe(const Ranking& a, const Ranking& b) {
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a.items()[i].external_id == b.items()[i].external_id;
    if (same) return;

    std::set<std::string> sa, sb;
    for (const auto& it : a.items()) sa.insert(it.external_id);
    for (const auto& it : b.items()) sb.insert(it.external_id);
    std::vector<std::string> diff;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
    std::string listed;
    for (std::size_t i = 0; i < diff.size() && i < 10; ++i) listed += (i ? ", " : "") + diff[i];
    if (diff.size() > 10) listed += ", ... (" + std::to_string(diff.size()) + " total)";
    throw EvalError(EvalErrc::MismatchedUniverse,
                    "rankings '" + a.name() + "' and '" + b.name() + "' cover different articles: " + listed);
}

}  // namespace

std::optional<double> spearman(const Ranking& r1, const Ranking& r2) {
    require_same_universe(r1, r2);
    const std::size_t n = r1.size();
    if (n < 2) throw EvalError(EvalErrc::TooFewItems, "spearman needs at least 2 items");
    const auto& x = r1.rank_positions();
    const auto& y = r2.rank_positions();
    // rank positions always sum to n(n+1)/2
    const double mean = 0.5 * static_cast<double>(n + 1);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean;
        const double dy = y[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

std::size_t topk_overlap(const Ranking& r1, const Ranking& r2, std::size_t k) {
    if (k > r1.size() || k > r2.size()) {
        throw EvalError(EvalErrc::KTooLarge, "k=" + std::to_string(k) + " exceeds ranking size (" +
                                                 std::to_string(std::min(r1.size(), r2.size())) + ")");
    }
    std::unordered_set<std::string> top(r1.order().begin(), r1.order().begin() + static_cast<std::ptrdiff_t>(k));
    std::size_t common = 0;
    for (std::size_t i = 0; i < k; ++i) common += top.contains(r2.order()[i]);
    return common;
}

Ranking ranking_from_report(const RankReport& report, const ScholGraph& g) {
    std::vector<ScoredItem> items;
    items.reserve(report.ranked.size());
    for (const auto& r : report.ranked) items.push_back({g.article(r.id).external_id, r.authority});
    return Ranking(report.setting, std::move(items));
}

Ranking citation_ranking(const ScholGraph& g, const Ranking* universe) {
    std::vector<ScoredItem> items;
    if (universe) {
        for (const auto& it : universe->items()) {
            auto id = g.find_article(it.external_id);
            if (!id) throw EvalError(EvalErrc::UnknownArticle, "article '" + it.external_id + "' is not in the graph");
            items.push_back({it.external_id, static_cast<double>(g.article(*id).citation_count_raw)});
        }
    } else {
        for (const auto& a : g.articles()) items.push_back({a.external_id, static_cast<double>(a.citation_count_raw)});
    }
    return Ranking("citation_count", std::move(items));
}

std::optional<double> citation_correlation(const Ranking& r, const ScholGraph& g) {
    return spearman(r, citation_ranking(g, &r));
}

ComparisonMatrix comparison_matrix(const std::vector<Ranking>& rankings, unsigned workers) {
    if (rankings.size() < 2) throw EvalError(EvalErrc::TooFewItems, "comparison needs at least 2 rankings");
    const std::size_t m = rankings.size();
    ComparisonMatrix out;
    for (const auto& r : rankings) out.names.push_back(r.name());
    out.rho.assign(m, std::vector<std::optional<double>>(m));
    for (std::size_t i = 1; i < m; ++i) require_same_universe(rankings[0], rankings[i]);

    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) cells.emplace_back(i, j);
    }
    std::vector<std::optional<double>> values(cells.size());
    parallel_for(cells.size(), workers,
                 [&](std::size_t c) { values[c] = spearman(rankings[cells[c].first], rankings[cells[c].second]); });
    for (std::size_t c = 0; c < cells.size(); ++c) {
        out.rho[cells[c].first][cells[c].second] = values[c];
        out.rho[cells[c].second][cells[c].first] = values[c];
    }
    for (std::size_t i = 0; i < m; ++i) out.rho[i][i] = 1.0;
    return out;
}

Ranking read_rank_report(const std::filesystem::path& path, std::string name) {
    std::ifstream in(path);
    if (!in) throw EvalError(EvalErrc::BadReport, "cannot read rank report " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("rank\texternal_id\tAS\t", 0) != 0) {
        throw EvalError(EvalErrc::BadReport, path.string() + ": unexpected header");
    }
    std::vector<ScoredItem> items;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string rank, id, as;
        if (!std::getline(fields, rank, '\t') || !std::getline(fields, id, '\t') || !std::getline(fields, as, '\t')) {
            throw EvalError(EvalErrc::BadReport, path.string() + ":" + std::to_string(lineno) + ": too few columns");
        }
        try {
            std::size_t used = 0;
            double score = std::stod(as, &used);
            if (used != as.size()) throw std::invalid_argument(as);
            items.push_back({id, score});
        } catch (const std::exception&) {
            throw EvalError(EvalErrc::BadReport,
                            path.string() + ":" + std::to_string(lineno) + ": bad AS value '" + as + "'");
        }
    }
    return Ranking(std::move(name), std::move(items));
}

std::string format_rho(std::optional<double> rho) {
    if (!rho) return "NaN";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *rho);
    return buf;
}

void write_correlations(const std::filesystem::path& path, const ComparisonMatrix& m) {
    std::ofstream out(path);
    if (!out) throw EvalError(EvalErrc::BadReport, "cannot write " + path.string());
    out << "setting_a\tsetting_b\trho\n";
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        for (std::size_t j = i + 1; j < m.names.size(); ++j) {
            out << m.names[i] << '\t' << m.names[j] << '\t' << format_rho(m.rho[i][j]) << '\n';
        }
    }
}

void write_plot_data(const std::filesystem::path& path, const ComparisonMatrix& m) {
    std::ofstream out(path);
    if (!out) throw EvalError(EvalErrc::BadReport, "cannot write " + path.string());
    out << "setting_a\tsetting_b\trho\n";
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        for (std::size_t j = 0; j < m.names.size(); ++j) {
            out << m.names[i] << '\t' << m.names[j] << '\t' << format_rho(m.rho[i][j]) << '\n';
        }
    }
}

void write_topk_overlap(const std::filesystem::path& path, const std::vector<Ranking>& rankings, std::size_t k) {
    std::vector<std::size_t> common;
    for (std::size_t i = 0; i < rankings.size(); ++i) {
        for (std::size_t j = i + 1; j < rankings.size(); ++j) common.push_back(topk_overlap(rankings[i], rankings[j], k));
    }
    std::ofstream out(path);
    if (!out) throw EvalError(EvalErrc::BadReport, "cannot write " + path.string());
    out << "setting_a\tsetting_b\tk\tcommon\n";
    std::size_t c = 0;
    for (std::size_t i = 0; i < rankings.size(); ++i) {
        for (std::size_t j = i + 1; j < rankings.size(); ++j) {
            out << rankings[i].name() << '\t' << rankings[j].name() << '\t' << k << '\t' << common[c++] << '\n';
        }
    }
}

void write_citation_correlations(const std::filesystem::path& path, const std::vector<Ranking>& rankings,
                                 const ScholGraph& g) {
    std::vector<std::optional<double>> rho;
    for (const auto& r : rankings) rho.push_back(citation_correlation(r, g));
    std::ofstream out(path);
    if (!out) throw EvalError(EvalErrc::BadReport, "cannot write " + path.string());
    out << "setting\trho\n";
    for (std::size_t i = 0; i < rankings.size(); ++i) out << rankings[i].name() << '\t' << format_rho(rho[i]) << '\n';
}

}  // namespace scholrank
