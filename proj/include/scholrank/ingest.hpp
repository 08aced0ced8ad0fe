#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scholrank/graph.hpp"

namespace scholrank {

struct TopicAnnotation {
    std::string article_external_id;
    std::string cui;
    std::string type_id;
    std::string preferred_name;
    double accuracy = 0;

    friend bool operator==(const TopicAnnotation&, const TopicAnnotation&) = default;
};

/// One row of a semantic-type table: T116 / aapp / Amino Acid, Peptide, or Protein.
struct SemanticType {
    std::string type_id;
    std::string code;
    std::string description;
};

/// Semantic types whose concepts become topic nodes.
std::span<const SemanticType> default_retained_types();
/// Semantic types whose concepts are always discarded.
std::span<const SemanticType> default_discarded_types();

struct IngestConfig {
    std::uint64_t min_citation_threshold = 20;
    double accuracy_threshold = 0.75;
    bool require_year = true;
    bool require_journal = false;
    std::set<std::string> retained_type_ids;
    std::set<std::string> discarded_type_ids;
    std::optional<int> t_current;
    /// Off when re-reading an already filtered graph bundle.
    bool apply_type_filter = true;

    /// Defaults with the built-in retained/discarded tables.
    static IngestConfig defaults();
    /// Stricter profile for the COVID corpus: articles must name a journal.
    static IngestConfig cord19_profile();

    /// Throws IngestError when the two type-id sets overlap or thresholds are out of range.
    void validate() const;
};

enum class IngestErrc { MalformedRecord, MissingFile, InconsistentHeader, InvalidConfig };

class IngestError : public std::runtime_error {
public:
    IngestError(IngestErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    IngestErrc code() const noexcept { return code_; }

private:
    IngestErrc code_;
};

/// Counts of what parsing kept and dropped, keyed by rule name.
struct IngestSummary {
    std::map<std::string, std::uint64_t> counts;
    std::vector<std::string> warnings;

    void bump(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }
    std::uint64_t get(const std::string& key) const;
};

struct CorpusPaths {
    std::filesystem::path articles;
    std::filesystem::path authorship;
    std::filesystem::path citations;
    std::filesystem::path annotations;
    /// journal_external_id, name; optional, journals otherwise take their id as name.
    std::optional<std::filesystem::path> journals;

    /// The conventional file names inside `dir`; journals.tsv is used when present.
    static CorpusPaths in_directory(const std::filesystem::path& dir);
};

/// Keeps annotations with accuracy >= threshold whose type id is retained and not discarded.
/// Repeated (article, cui) pairs collapse to one: the highest accuracy, then the smallest type id and name.
/// Output is sorted by (article, cui), so it does not depend on input order. Unknown type ids are dropped and counted in `summary`.
std::vector<TopicAnnotation> filter_annotations(const std::vector<TopicAnnotation>& anns, const IngestConfig& cfg,
                                                IngestSummary* summary = nullptr);

/// Parses the corpus files into the pre-cut graph.
///
/// Order of rules: duplicate article ids are dropped (first occurrence wins), then rows failing
/// require_year / require_journal, then annotations go through filter_annotations. Edge rows that
/// reference dropped or unknown articles, duplicate edge rows and self-citations are skipped and counted.
ScholGraph parse_corpus(const CorpusPaths& paths, const IngestConfig& cfg, IngestSummary* summary = nullptr);

/// Writes the graph back out in the corpus formats (annotations get accuracy 1).
void write_corpus(const ScholGraph& g, const std::filesystem::path& dir);

/// Reads a type_id / code / description table.
std::vector<SemanticType> read_type_table(const std::filesystem::path& path);
void write_type_table(const std::filesystem::path& path, std::span<const SemanticType> rows);

/// Shape of a synthetic graph. Probabilities are per candidate edge.
struct FixtureParams {
    std::size_t n_articles = 100;
    std::size_t n_authors = 60;
    std::size_t n_journals = 8;
    std::size_t n_topics = 30;
    double citation_prob = 0.05;
    std::size_t max_authors_per_article = 3;
    std::size_t max_topics_per_article = 4;
    double journal_prob = 0.9;
    int year_min = 2015;
    int year_max = 2021;
};

/// Deterministic random graph for a fixed seed.
ScholGraph generate_fixture(std::uint64_t seed, const FixtureParams& params = {});

}  // namespace scholrank
