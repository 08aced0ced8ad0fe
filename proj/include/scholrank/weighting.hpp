#pragma once

#include <cmath>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "scholrank/graph.hpp"

namespace scholrank {

/// How the author term of the network similarity counts shared authors.
enum class AuthorOverlap {
    Intersection,  // |A1 ∩ A2| / sqrt(|A1| |A2|)
    Union,         // |A1 ∪ A2| / sqrt(|A1| |A2|), the literal printed form
};

struct SimilarityCoeffs {
    double alpha_n = 0.6;  // co-citation neighbourhood
    double beta_n = 0.3;   // shared authors
    double gamma_n = 0.1;  // same journal
    double lambda = 6.0;   // gate sharpness of the blended weight
    AuthorOverlap author_overlap = AuthorOverlap::Intersection;

    void validate() const;
};

enum class HubTimeDirection {
    Decay,   // a^(-dt)
    Growth,  // a^(+dt)
};

struct TimeParams {
    double hub_base = 2.0;      // a
    double authority_b = 1.0;   // b
    double time_value_p = 0.1;  // p
    HubTimeDirection hub_direction = HubTimeDirection::Decay;

    void validate() const;
};

class WeightingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-citation weights, indexed like ScholGraph::citations().
struct EdgeWeights {
    std::vector<double> s_n;
    std::vector<double> s_s;
    std::vector<double> s;
    double tau_n = 0.0;  // median of s_n
    double tau_s = 0.0;  // median of s_s

    std::size_t size() const { return s.size(); }
    bool empty() const { return s.empty(); }
};

/// Cosine overlap |x ∩ y| / sqrt(|x| |y|) of two ascending sequences; 0 when either is empty.
template <class T>
double cosine_overlap(std::span<const T> x, std::span<const T> y) {
    if (x.empty() || y.empty()) return 0.0;
    std::size_t common = 0;
    for (auto i = x.begin(), j = y.begin(); i != x.end() && j != y.end();) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common, ++i, ++j;
        }
    }
    return static_cast<double>(common) / std::sqrt(static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

double network_similarity(const ScholGraph& g, ArticleId p1, ArticleId p2, const SimilarityCoeffs& c = {});
double semantic_similarity(const ScholGraph& g, ArticleId p1, ArticleId p2);

/// Median of a population; the mean of the two middle values for even sizes.
double median(std::vector<double> values);

/// e^{λ(s_n−τ1)}·s_n + e^{λ(s_s−τ2)}·s_s
double blend_weight(double s_n, double s_s, double tau_n, double tau_s, double lambda);

/// Throws WeightingError when the graph has no citation edges.
EdgeWeights compute_edge_weights(const ScholGraph& g, const SimilarityCoeffs& c = {}, unsigned workers = 1);

double hub_time_weight(int delta_years, const TimeParams& tp = {});
double authority_time_weight(int delta_years, const TimeParams& tp = {});
double time_value(int delta_years, const TimeParams& tp = {});

/// Writes citing_id, cited_id, s_n, s_s, s with 17 significant digits.
void write_edge_weights(const std::filesystem::path& path, const ScholGraph& g, const EdgeWeights& w);

}  // namespace scholrank
