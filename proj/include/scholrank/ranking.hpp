#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scholrank/graph.hpp"
#include "scholrank/weighting.hpp"

namespace scholrank {

/// Coefficients of the authority combination plus solver controls.
struct Setting {
    std::string name;
    double alpha = 0;  // PageRank term
    double beta = 0;   // author hubs
    double gamma = 0;  // journal hubs
    double delta = 0;  // topic hubs
    double omega = 0;  // article hubs
    double sigma = 0;  // time value
    int max_iters = 100;
    double tol = 1e-8;

    double coefficient_sum() const { return alpha + beta + gamma + delta + omega + sigma; }
    /// Residual mass spread uniformly over articles.
    double jump_mass() const;
    /// Throws RankingError on negative coefficients, a sum above 1, or bad solver controls.
    void validate() const;
};

class RankingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HubScores {
    std::vector<double> author;
    std::vector<double> journal;
    std::vector<double> topic;
    std::vector<double> article;
};

/// Per-article vectors feeding the authority update, each summing to 1.
struct AuthorityContributions {
    std::vector<double> author;
    std::vector<double> journal;
    std::vector<double> topic;
    std::vector<double> article;
    std::vector<double> time;
};

struct RankState {
    std::vector<double> authority;
    HubScores hubs;
    int iteration = 0;
    double last_delta = 0;
};

struct RankOptions {
    unsigned workers = 1;
    /// Rescale the new authority vector to sum 1 after each iteration.
    bool renormalize = true;
    /// Called after every iteration with the freshly updated state.
    std::function<void(const RankState&)> on_iteration;
};

/// Non-fatal conditions hit while ranking, e.g. a layer whose transfers were all zero.
struct RankWarnings {
    std::vector<std::string> messages;

    void add(std::string msg);
};

struct RankedArticle {
    ArticleId id;
    double authority = 0;
    // coefficient-weighted terms from the final update
    double pr_part = 0;
    double author_part = 0;
    double journal_part = 0;
    double topic_part = 0;
    double article_part = 0;
    double time_part = 0;
};

struct RankReport {
    std::string setting;
    /// Descending authority, ties by ascending external id.
    std::vector<RankedArticle> ranked;
    int iterations = 0;
    bool converged = false;
    double last_delta = 0;
    std::vector<std::string> warnings;
};

/// Eqs. for the four hub classes; each non-empty vector is scaled to sum 1.
HubScores update_hub_scores(const ScholGraph& g, std::span<const double> authority, const TimeParams& tp,
                            unsigned workers = 1, RankWarnings* warnings = nullptr);

/// Weighted citation transfer of authority. Articles with no outgoing weight spread their mass uniformly.
/// `weights` may be empty only when the graph has no citations.
std::vector<double> pagerank_term(const ScholGraph& g, const EdgeWeights& weights, std::span<const double> authority,
                                  unsigned workers = 1);

AuthorityContributions authority_contributions(const ScholGraph& g, const HubScores& hubs, const TimeParams& tp,
                                               unsigned workers = 1, RankWarnings* warnings = nullptr);

RankReport run_ranking(const ScholGraph& g, const EdgeWeights& weights, const Setting& s, const TimeParams& tp,
                       const RankOptions& opts = {});

/// The twenty named coefficient rows, in table order.
std::span<const Setting> presets();
std::vector<std::string> preset_names();
/// Throws RankingError listing the valid names when `name` is unknown.
Setting load_preset(std::string_view name);

/// File-name-safe form of a setting name ("Topic Dominated" -> "Topic_Dominated").
std::string setting_file_stem(std::string_view name);

void write_rank_report(const std::filesystem::path& path, const ScholGraph& g, const RankReport& report);

}  // namespace scholrank
