#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scholrank/graph.hpp"
#include "scholrank/ranking.hpp"

namespace scholrank {

enum class EvalErrc { MismatchedUniverse, KTooLarge, TooFewItems, UnknownArticle, BadReport };

class EvalError : public std::runtime_error {
public:
    EvalError(EvalErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    EvalErrc code() const noexcept { return code_; }

private:
    EvalErrc code_;
};

struct ScoredItem {
    std::string external_id;
    double score = 0;
};

/// A scored article list. order() is descending score with ties by ascending id.
class Ranking {
public:
    Ranking() = default;
    Ranking(std::string name, std::vector<ScoredItem> items);

    const std::string& name() const { return name_; }
    std::size_t size() const { return items_.size(); }
    /// Items sorted by external id.
    const std::vector<ScoredItem>& items() const { return items_; }
    /// External ids in ranked order.
    const std::vector<std::string>& order() const { return order_; }
    /// 1-based positions aligned with items(); tied scores share the mean of their positions.
    const std::vector<double>& rank_positions() const { return positions_; }

private:
    std::string name_;
    std::vector<ScoredItem> items_;
    std::vector<std::string> order_;
    std::vector<double> positions_;
};

/// Tie-averaged 1-based rank positions of `scores`, highest score at rank 1.
std::vector<double> tie_averaged_ranks(const std::vector<double>& scores);

/// Pearson correlation of the tie-averaged ranks.
/// Returns std::nullopt when either ranking has all scores tied (undefined correlation).
/// Throws EvalError on differing article sets or fewer than 2 items.
std::optional<double> spearman(const Ranking& r1, const Ranking& r2);

/// |top-k(r1) ∩ top-k(r2)| over the tie-broken orders.
std::size_t topk_overlap(const Ranking& r1, const Ranking& r2, std::size_t k);

Ranking ranking_from_report(const RankReport& report, const ScholGraph& g);
/// Ranking by citation_count_raw for the articles in `universe` (defaults to every article).
Ranking citation_ranking(const ScholGraph& g, const Ranking* universe = nullptr);
std::optional<double> citation_correlation(const Ranking& r, const ScholGraph& g);

struct ComparisonMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<std::optional<double>>> rho;
};

ComparisonMatrix comparison_matrix(const std::vector<Ranking>& rankings, unsigned workers = 1);

/// Reads a rank_<setting>.tsv file (external_id and AS columns).
Ranking read_rank_report(const std::filesystem::path& path, std::string name);

/// "NaN" for undefined correlations, otherwise 4 decimals.
std::string format_rho(std::optional<double> rho);

/// setting_a, setting_b, rho for every unordered pair a < b in input order.
void write_correlations(const std::filesystem::path& path, const ComparisonMatrix& m);
/// setting_a, setting_b, rho for every ordered pair including the diagonal (long format for plotting).
void write_plot_data(const std::filesystem::path& path, const ComparisonMatrix& m);
void write_topk_overlap(const std::filesystem::path& path, const std::vector<Ranking>& rankings, std::size_t k);
void write_citation_correlations(const std::filesystem::path& path, const std::vector<Ranking>& rankings,
                                 const ScholGraph& g);

}  // namespace scholrank
