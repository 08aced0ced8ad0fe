#include "scholrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace scholrank {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Article: return "article";
    case NodeKind::Author: return "author";
    case NodeKind::Journal: return "journal";
    case NodeKind::Topic: return "topic";
    }
    return "unknown";
}

namespace {

template <class T, class Key>
std::unordered_map<std::string, std::uint32_t> sort_and_index(std::vector<T>& nodes, Key key, NodeKind kind) {
    std::sort(nodes.begin(), nodes.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(nodes.size());
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
        if (!index.emplace(key(nodes[i]), i).second) {
            throw GraphError(GraphErrc::DuplicateId,
                             "duplicate " + std::string(to_string(kind)) + " id '" + key(nodes[i]) + "'");
        }
    }
    return index;
}

std::uint32_t resolve(const std::unordered_map<std::string, std::uint32_t>& index, const std::string& id,
                      NodeKind kind, std::string_view edge_set) {
    auto it = index.find(id);
    if (it == index.end()) {
        throw GraphError(GraphErrc::DanglingEdgeEndpoint, std::string(edge_set) + " edge references unknown " +
                                                              std::string(to_string(kind)) + " '" + id + "'");
    }
    return it->second;
}

/// Builds rows from (row, item) pairs already sorted by row then item.
template <class T>
Adjacency<T> make_rows(std::size_t rows, const std::vector<std::pair<std::uint32_t, T>>& pairs) {
    Adjacency<T> adj;
    adj.offsets.assign(rows + 1, 0);
    adj.items.reserve(pairs.size());
    for (const auto& [r, item] : pairs) {
        ++adj.offsets[r + 1];
        adj.items.push_back(item);
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    return adj;
}

template <NodeKind K>
std::vector<std::pair<std::uint32_t, TypedId<K>>> resolve_edges(
    const std::vector<EdgeRecords::Pair>& records, const std::unordered_map<std::string, std::uint32_t>& article_index,
    const std::unordered_map<std::string, std::uint32_t>& other_index, std::string_view edge_set) {
    std::vector<std::pair<std::uint32_t, TypedId<K>>> out;
    out.reserve(records.size());
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& [article, other] : records) {
        auto p = resolve(article_index, article, NodeKind::Article, edge_set);
        auto o = resolve(other_index, other, K, edge_set);
        if (!seen.emplace(p, o).second) {
            throw GraphError(GraphErrc::DuplicateEdge,
                             "duplicate " + std::string(edge_set) + " edge ('" + article + "', '" + other + "')");
        }
        out.emplace_back(p, TypedId<K>{o});
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <NodeKind K>
Adjacency<ArticleId> invert(std::size_t rows, const std::vector<std::pair<std::uint32_t, TypedId<K>>>& pairs) {
    std::vector<std::pair<std::uint32_t, ArticleId>> inv;
    inv.reserve(pairs.size());
    for (const auto& [a, other] : pairs) inv.emplace_back(other.value, ArticleId{a});
    std::sort(inv.begin(), inv.end());
    return make_rows(rows, inv);
}

template <class Id>
std::optional<Id> lookup(const std::unordered_map<std::string, std::uint32_t>& index, std::string_view key) {
    auto it = index.find(std::string(key));
    if (it == index.end()) return std::nullopt;
    return Id{it->second};
}

template <class T>
bool same_rows(const Adjacency<T>& a, const Adjacency<T>& b) {
    return a.offsets == b.offsets && a.items == b.items;
}

}  // namespace

std::size_t ScholGraph::node_count(NodeKind kind) const {
    switch (kind) {
    case NodeKind::Article: return articles_.size();
    case NodeKind::Author: return authors_.size();
    case NodeKind::Journal: return journals_.size();
    case NodeKind::Topic: return topics_.size();
    }
    return 0;
}

std::optional<ArticleId> ScholGraph::find_article(std::string_view id) const {
    return lookup<ArticleId>(article_index_, id);
}
std::optional<AuthorId> ScholGraph::find_author(std::string_view id) const {
    return lookup<AuthorId>(author_index_, id);
}
std::optional<JournalId> ScholGraph::find_journal(std::string_view id) const {
    return lookup<JournalId>(journal_index_, id);
}
std::optional<TopicId> ScholGraph::find_topic(std::string_view cui) const { return lookup<TopicId>(topic_index_, cui); }

GraphInput ScholGraph::to_input() const {
    GraphInput in;
    in.articles = articles_;
    in.authors = authors_;
    in.journals = journals_;
    in.topics = topics_;
    for (const auto& c : citations_) {
        in.edges.citations.emplace_back(articles_[c.citing.value].external_id, articles_[c.cited.value].external_id);
    }
    for (std::uint32_t p = 0; p < articles_.size(); ++p) {
        const auto& pid = articles_[p].external_id;
        for (auto a : article_authors_.row(p)) in.edges.authorship.emplace_back(pid, authors_[a.value].external_id);
        if (article_journal_[p]) in.edges.publication.emplace_back(pid, journals_[article_journal_[p]->value].external_id);
        for (auto t : article_topics_.row(p)) in.edges.topicality.emplace_back(pid, topics_[t.value].cui);
    }
    for (const auto& [a, b] : topic_hierarchy_) in.edges.topic_hierarchy.emplace_back(topics_[a.value].cui, topics_[b.value].cui);
    return in;
}

bool operator==(const ScholGraph& a, const ScholGraph& b) {
    return a.t_current_ == b.t_current_ && a.articles_ == b.articles_ && a.authors_ == b.authors_ &&
           a.journals_ == b.journals_ && a.topics_ == b.topics_ && a.citations_ == b.citations_ &&
           a.topic_hierarchy_ == b.topic_hierarchy_ && a.article_journal_ == b.article_journal_ &&
           same_rows(a.article_authors_, b.article_authors_) && same_rows(a.article_topics_, b.article_topics_);
}

ScholGraph build_graph(GraphInput input, std::optional<int> t_current_override) {
    ScholGraph g;
    if (input.articles.empty() && !t_current_override) {
        throw GraphError(GraphErrc::EmptyGraph, "graph has no articles and no t_current override");
    }
    for (const auto& a : input.articles) {
        if (a.year <= 0) {
            throw GraphError(GraphErrc::InvalidYear,
                             "article '" + a.external_id + "' has invalid year " + std::to_string(a.year));
        }
    }

    g.articles_ = std::move(input.articles);
    g.authors_ = std::move(input.authors);
    g.journals_ = std::move(input.journals);
    g.topics_ = std::move(input.topics);
    g.article_index_ = sort_and_index(g.articles_, [](const Article& a) -> const std::string& { return a.external_id; },
                                      NodeKind::Article);
    g.author_index_ = sort_and_index(g.authors_, [](const Author& a) -> const std::string& { return a.external_id; },
                                     NodeKind::Author);
    g.journal_index_ = sort_and_index(g.journals_, [](const Journal& j) -> const std::string& { return j.external_id; },
                                      NodeKind::Journal);
    g.topic_index_ =
        sort_and_index(g.topics_, [](const Topic& t) -> const std::string& { return t.cui; }, NodeKind::Topic);

    const std::size_t n = g.articles_.size();

    // citations
    g.citations_.reserve(input.edges.citations.size());
    for (const auto& [citing, cited] : input.edges.citations) {
        if (citing == cited) throw GraphError(GraphErrc::SelfCitation, "self-citation on article '" + citing + "'");
        g.citations_.push_back({ArticleId{resolve(g.article_index_, citing, NodeKind::Article, "citation")},
                                ArticleId{resolve(g.article_index_, cited, NodeKind::Article, "citation")}});
    }
    std::sort(g.citations_.begin(), g.citations_.end());
    if (auto dup = std::adjacent_find(g.citations_.begin(), g.citations_.end()); dup != g.citations_.end()) {
        throw GraphError(GraphErrc::DuplicateEdge, "duplicate citation '" + g.articles_[dup->citing.value].external_id +
                                                       "' -> '" + g.articles_[dup->cited.value].external_id + "'");
    }
    {
        std::vector<std::pair<std::uint32_t, ArticleId>> out_pairs, in_pairs, nbr_pairs;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out_e, in_e;
        for (std::uint32_t e = 0; e < g.citations_.size(); ++e) {
            const auto& c = g.citations_[e];
            out_pairs.emplace_back(c.citing.value, c.cited);
            out_e.emplace_back(c.citing.value, e);
            in_pairs.emplace_back(c.cited.value, c.citing);
            nbr_pairs.emplace_back(c.citing.value, c.cited);
            nbr_pairs.emplace_back(c.cited.value, c.citing);
        }
        // in-edges ordered by (cited, citing) so in_edges stays aligned with in_citations
        std::vector<std::uint32_t> order(g.citations_.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
            const auto& a = g.citations_[x];
            const auto& b = g.citations_[y];
            return std::pair(a.cited, a.citing) < std::pair(b.cited, b.citing);
        });
        in_pairs.clear();
        for (auto e : order) {
            in_pairs.emplace_back(g.citations_[e].cited.value, g.citations_[e].citing);
            in_e.emplace_back(g.citations_[e].cited.value, e);
        }
        std::sort(nbr_pairs.begin(), nbr_pairs.end());
        nbr_pairs.erase(std::unique(nbr_pairs.begin(), nbr_pairs.end()), nbr_pairs.end());
        g.out_ = make_rows(n, out_pairs);
        g.out_edges_ = make_rows(n, out_e);
        g.in_ = make_rows(n, in_pairs);
        g.in_edges_ = make_rows(n, in_e);
        g.neighbors_ = make_rows(n, nbr_pairs);
    }

    auto authorship = resolve_edges<NodeKind::Author>(input.edges.authorship, g.article_index_, g.author_index_,
                                                      "authorship");
    g.article_authors_ = make_rows(n, authorship);
    g.author_articles_ = invert(g.authors_.size(), authorship);

    auto publication = resolve_edges<NodeKind::Journal>(input.edges.publication, g.article_index_, g.journal_index_,
                                                        "publication");
    g.article_journal_.assign(n, std::nullopt);
    for (const auto& [p, j] : publication) {
        if (g.article_journal_[p]) {
            throw GraphError(GraphErrc::MultipleJournals, "article '" + g.articles_[p].external_id +
                                                              "' published in both '" +
                                                              g.journals_[g.article_journal_[p]->value].external_id +
                                                              "' and '" + g.journals_[j.value].external_id + "'");
        }
        g.article_journal_[p] = j;
    }
    g.journal_articles_ = invert(g.journals_.size(), publication);

    auto topicality =
        resolve_edges<NodeKind::Topic>(input.edges.topicality, g.article_index_, g.topic_index_, "topicality");
    g.article_topics_ = make_rows(n, topicality);
    g.topic_articles_ = invert(g.topics_.size(), topicality);

    for (const auto& [a, b] : input.edges.topic_hierarchy) {
        g.topic_hierarchy_.emplace_back(TopicId{resolve(g.topic_index_, a, NodeKind::Topic, "topic hierarchy")},
                                        TopicId{resolve(g.topic_index_, b, NodeKind::Topic, "topic hierarchy")});
    }
    std::sort(g.topic_hierarchy_.begin(), g.topic_hierarchy_.end());
    if (auto dup = std::adjacent_find(g.topic_hierarchy_.begin(), g.topic_hierarchy_.end());
        dup != g.topic_hierarchy_.end()) {
        throw GraphError(GraphErrc::DuplicateEdge, "duplicate topic hierarchy edge '" +
                                                       g.topics_[dup->first.value].cui + "' -> '" +
                                                       g.topics_[dup->second.value].cui + "'");
    }

    int max_year = 0;
    for (const auto& a : g.articles_) max_year = std::max(max_year, a.year);
    if (t_current_override) {
        if (*t_current_override < max_year) {
            throw GraphError(GraphErrc::InvalidCurrentYear, "t_current " + std::to_string(*t_current_override) +
                                                                " precedes latest article year " +
                                                                std::to_string(max_year));
        }
        g.t_current_ = *t_current_override;
    } else {
        g.t_current_ = max_year;
    }
    return g;
}

ScholGraph subgraph_by_min_citations(const ScholGraph& g, std::uint64_t k) {
    GraphInput full = g.to_input();
    GraphInput cut;

    std::set<std::string> kept;
    for (auto& a : full.articles) {
        if (a.citation_count_raw >= k) {
            kept.insert(a.external_id);
            cut.articles.push_back(std::move(a));
        }
    }
    auto keep_edge = [&](const EdgeRecords::Pair& e) { return kept.contains(e.first); };

    for (auto& c : full.edges.citations) {
        if (kept.contains(c.first) && kept.contains(c.second)) cut.edges.citations.push_back(std::move(c));
    }

    // nodes that had edges and lost all of them are dropped; originally isolated nodes stay
    auto filter_kind = [&](auto& nodes, auto key, const std::vector<EdgeRecords::Pair>& edges,
                           std::vector<EdgeRecords::Pair>& kept_edges, auto& out_nodes) {
        std::set<std::string> had_edge, has_edge;
        for (const auto& e : edges) {
            had_edge.insert(e.second);
            if (keep_edge(e)) {
                has_edge.insert(e.second);
                kept_edges.push_back(e);
            }
        }
        for (auto& node : nodes) {
            const std::string& id = key(node);
            if (!had_edge.contains(id) || has_edge.contains(id)) out_nodes.push_back(std::move(node));
        }
    };
    filter_kind(full.authors, [](const Author& a) -> const std::string& { return a.external_id; },
                full.edges.authorship, cut.edges.authorship, cut.authors);
    filter_kind(full.journals, [](const Journal& j) -> const std::string& { return j.external_id; },
                full.edges.publication, cut.edges.publication, cut.journals);

    // a topic also counts hierarchy links as edges, but only article links decide whether it "lost" them
    filter_kind(full.topics, [](const Topic& t) -> const std::string& { return t.cui; }, full.edges.topicality,
                cut.edges.topicality, cut.topics);
    std::set<std::string> topics_left;
    for (const auto& t : cut.topics) topics_left.insert(t.cui);
    for (auto& e : full.edges.topic_hierarchy) {
        if (topics_left.contains(e.first) && topics_left.contains(e.second)) cut.edges.topic_hierarchy.push_back(e);
    }

    return build_graph(std::move(cut), g.t_current());
}

}  // namespace scholrank
