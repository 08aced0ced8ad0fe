#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scholrank {

enum class NodeKind : std::uint8_t { Article, Author, Journal, Topic };

std::string_view to_string(NodeKind kind);

/// Dense per-kind index. The tag keeps article and author indices from mixing.
template <NodeKind K>
struct TypedId {
    std::uint32_t value = 0;

    static constexpr NodeKind kind = K;
    friend constexpr auto operator<=>(TypedId, TypedId) = default;
};

using ArticleId = TypedId<NodeKind::Article>;
using AuthorId = TypedId<NodeKind::Author>;
using JournalId = TypedId<NodeKind::Journal>;
using TopicId = TypedId<NodeKind::Topic>;

struct NodeId {
    NodeKind kind = NodeKind::Article;
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct Article {
    std::string external_id;
    std::string title;
    int year = 0;
    bool abstract_present = false;
    std::uint64_t citation_count_raw = 0;

    friend bool operator==(const Article&, const Article&) = default;
};

struct Author {
    std::string external_id;
    std::string name;

    friend bool operator==(const Author&, const Author&) = default;
};

struct Journal {
    std::string external_id;
    std::string name;

    friend bool operator==(const Journal&, const Journal&) = default;
};

struct Topic {
    std::string cui;
    std::string type_id;
    std::string preferred_name;

    friend bool operator==(const Topic&, const Topic&) = default;
};

/// Edge lists keyed by external ids, the form records arrive in.
struct EdgeRecords {
    using Pair = std::pair<std::string, std::string>;

    std::vector<Pair> citations;        // (citing article, cited article)
    std::vector<Pair> authorship;       // (article, author)
    std::vector<Pair> publication;      // (article, journal)
    std::vector<Pair> topicality;       // (article, topic cui)
    std::vector<Pair> topic_hierarchy;  // (topic cui, topic cui); stored, never ranked
};

struct GraphInput {
    std::vector<Article> articles;
    std::vector<Author> authors;
    std::vector<Journal> journals;
    std::vector<Topic> topics;
    EdgeRecords edges;
};

enum class GraphErrc {
    DuplicateId,
    DuplicateEdge,
    DanglingEdgeEndpoint,
    MultipleJournals,
    SelfCitation,
    EmptyGraph,
    InvalidYear,
    InvalidCurrentYear,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

struct Citation {
    ArticleId citing;
    ArticleId cited;

    friend constexpr auto operator<=>(const Citation&, const Citation&) = default;
};

/// Compressed row storage: row i is items[offsets[i] .. offsets[i+1]).
template <class T>
struct Adjacency {
    std::vector<std::uint32_t> offsets{0};
    std::vector<T> items;

    std::span<const T> row(std::size_t i) const {
        return {items.data() + offsets[i], items.data() + offsets[i + 1]};
    }
    std::size_t rows() const { return offsets.size() - 1; }
};

/// Immutable heterogeneous scholarly network.
///
/// Node tables are sorted by external id (cui for topics), so the dense index
/// of a node does not depend on the order records were supplied in. Every
/// adjacency row is sorted ascending.
class ScholGraph {
public:
    ScholGraph() = default;

    std::span<const Article> articles() const { return articles_; }
    std::span<const Author> authors() const { return authors_; }
    std::span<const Journal> journals() const { return journals_; }
    std::span<const Topic> topics() const { return topics_; }

    std::size_t article_count() const { return articles_.size(); }
    std::size_t author_count() const { return authors_.size(); }
    std::size_t journal_count() const { return journals_.size(); }
    std::size_t topic_count() const { return topics_.size(); }
    std::size_t node_count(NodeKind kind) const;

    const Article& article(ArticleId id) const { return articles_[id.value]; }
    const Author& author(AuthorId id) const { return authors_[id.value]; }
    const Journal& journal(JournalId id) const { return journals_[id.value]; }
    const Topic& topic(TopicId id) const { return topics_[id.value]; }

    /// Citation edges sorted by (citing, cited). Edge index e refers to citations()[e].
    std::span<const Citation> citations() const { return citations_; }
    std::span<const std::pair<TopicId, TopicId>> topic_hierarchy() const { return topic_hierarchy_; }

    std::span<const ArticleId> in_citations(ArticleId p) const { return in_.row(p.value); }
    std::span<const ArticleId> out_citations(ArticleId p) const { return out_.row(p.value); }
    /// Indices into citations() of the edges leaving / entering p, aligned with out_citations / in_citations.
    std::span<const std::uint32_t> out_edges(ArticleId p) const { return out_edges_.row(p.value); }
    std::span<const std::uint32_t> in_edges(ArticleId p) const { return in_edges_.row(p.value); }
    /// Union of citing and cited articles.
    std::span<const ArticleId> neighbors(ArticleId p) const { return neighbors_.row(p.value); }

    std::span<const AuthorId> authors_of(ArticleId p) const { return article_authors_.row(p.value); }
    std::optional<JournalId> journal_of(ArticleId p) const { return article_journal_[p.value]; }
    std::span<const TopicId> topics_of(ArticleId p) const { return article_topics_.row(p.value); }

    std::span<const ArticleId> articles_of(AuthorId a) const { return author_articles_.row(a.value); }
    std::span<const ArticleId> articles_of(JournalId j) const { return journal_articles_.row(j.value); }
    std::span<const ArticleId> articles_of(TopicId t) const { return topic_articles_.row(t.value); }

    int t_current() const { return t_current_; }
    int age(ArticleId p) const { return t_current_ - articles_[p.value].year; }

    std::optional<ArticleId> find_article(std::string_view external_id) const;
    std::optional<AuthorId> find_author(std::string_view external_id) const;
    std::optional<JournalId> find_journal(std::string_view external_id) const;
    std::optional<TopicId> find_topic(std::string_view cui) const;

    /// Edge records expressed with external ids, in canonical order.
    GraphInput to_input() const;

    friend bool operator==(const ScholGraph&, const ScholGraph&);

private:
    friend ScholGraph build_graph(GraphInput input, std::optional<int> t_current_override);

    std::vector<Article> articles_;
    std::vector<Author> authors_;
    std::vector<Journal> journals_;
    std::vector<Topic> topics_;

    std::vector<Citation> citations_;
    std::vector<std::pair<TopicId, TopicId>> topic_hierarchy_;

    Adjacency<ArticleId> in_;
    Adjacency<ArticleId> out_;
    Adjacency<std::uint32_t> in_edges_;
    Adjacency<std::uint32_t> out_edges_;
    Adjacency<ArticleId> neighbors_;
    Adjacency<AuthorId> article_authors_;
    Adjacency<TopicId> article_topics_;
    std::vector<std::optional<JournalId>> article_journal_;
    Adjacency<ArticleId> author_articles_;
    Adjacency<ArticleId> journal_articles_;
    Adjacency<ArticleId> topic_articles_;

    std::unordered_map<std::string, std::uint32_t> article_index_;
    std::unordered_map<std::string, std::uint32_t> author_index_;
    std::unordered_map<std::string, std::uint32_t> journal_index_;
    std::unordered_map<std::string, std::uint32_t> topic_index_;

    int t_current_ = 0;
};

/// Validates the records and builds every adjacency index.
///
/// t_current is the override when given, otherwise the latest article year.
/// Throws GraphError naming the offending record on duplicate ids or edges,
/// dangling endpoints, self-citations, a second journal for one article,
/// non-positive years, or an empty article list without an override.
ScholGraph build_graph(GraphInput input, std::optional<int> t_current_override = std::nullopt);

/// Keeps articles with citation_count_raw >= k and the citations among them.
/// Authors, journals and topics that lose their last edge are dropped; nodes
/// that had no edges to begin with are kept, so k = 0 is the identity.
ScholGraph subgraph_by_min_citations(const ScholGraph& g, std::uint64_t k);

}  // namespace scholrank
