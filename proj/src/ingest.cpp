#include "scholrank/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace scholrank {

namespace {

constexpr std::string_view kArticlesHeader = "external_id\ttitle\tyear\tjournal_external_id\tcitation_count_raw";
constexpr std::string_view kAuthorshipHeader = "article_external_id\tauthor_external_id\tauthor_name";
constexpr std::string_view kCitationsHeader = "citing_external_id\tcited_external_id";
constexpr std::string_view kAnnotationsHeader = "article_external_id\tcui\ttype_id\tpreferred_name\taccuracy";
constexpr std::string_view kJournalsHeader = "journal_external_id\tname";
constexpr std::string_view kTypeTableHeader = "type_id\tcode\tdescription";

std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

/// Line-oriented TSV reader with a fixed header.
class TsvReader {
public:
    TsvReader(const std::filesystem::path& path, std::string_view header) : path_(path), in_(path) {
        if (!in_) throw IngestError(IngestErrc::MissingFile, "cannot open " + path.string());
        std::string line;
        if (!next_line(line) || line != header) {
            throw IngestError(IngestErrc::InconsistentHeader,
                              path.string() + ": expected header '" + std::string(header) + "'");
        }
        columns_ = split_tabs(header).size();
    }

    /// Next data row, or false at end of file. Blank lines are skipped.
    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (next_line(line)) {
            if (line.empty()) continue;
            fields = split_tabs(line);
            if (fields.size() != columns_) {
                fail("expected " + std::to_string(columns_) + " columns, found " + std::to_string(fields.size()));
            }
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& reason) const {
        throw IngestError(IngestErrc::MalformedRecord, path_.string() + ":" + std::to_string(line_) + ": " + reason);
    }

    std::size_t line() const { return line_; }

private:
    bool next_line(std::string& line) {
        if (!std::getline(in_, line)) return false;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

    std::filesystem::path path_;
    std::ifstream in_;
    std::size_t columns_ = 0;
    std::size_t line_ = 0;
};

template <class T>
bool parse_number(const std::string& s, T& out) {
    if (s.empty()) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::set<std::string> ids_of(std::span<const SemanticType> rows) {
    std::set<std::string> out;
    for (const auto& r : rows) out.insert(r.type_id);
    return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IngestError(IngestErrc::MissingFile, "cannot write " + path.string());
    return out;
}

}  // namespace

std::uint64_t IngestSummary::get(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

IngestConfig IngestConfig::defaults() {
    IngestConfig cfg;
    cfg.retained_type_ids = ids_of(default_retained_types());
    cfg.discarded_type_ids = ids_of(default_discarded_types());
    return cfg;
}

IngestConfig IngestConfig::cord19_profile() {
    auto cfg = defaults();
    cfg.require_journal = true;
    return cfg;
}

void IngestConfig::validate() const {
    if (!(accuracy_threshold >= 0 && accuracy_threshold <= 1)) {
        throw IngestError(IngestErrc::InvalidConfig, "accuracy threshold must lie in [0, 1]");
    }
    for (const auto& id : retained_type_ids) {
        if (discarded_type_ids.contains(id)) {
            throw IngestError(IngestErrc::InvalidConfig, "type id " + id + " is both retained and discarded");
        }
    }
}

CorpusPaths CorpusPaths::in_directory(const std::filesystem::path& dir) {
    CorpusPaths p{dir / "articles.tsv", dir / "authorship.tsv", dir / "citations.tsv", dir / "annotations.tsv",
                  std::nullopt};
    if (std::filesystem::exists(dir / "journals.tsv")) p.journals = dir / "journals.tsv";
    return p;
}

std::vector<TopicAnnotation> filter_annotations(const std::vector<TopicAnnotation>& anns, const IngestConfig& cfg,
                                                IngestSummary* summary) {
    IngestSummary local;
    IngestSummary& s = summary ? *summary : local;
    std::vector<TopicAnnotation> kept;
    std::set<std::string> unknown;
    for (const auto& a : anns) {
        if (!(a.accuracy >= cfg.accuracy_threshold)) {
            s.bump("annotations_low_accuracy");
        } else if (!cfg.apply_type_filter) {
            kept.push_back(a);
        } else if (cfg.discarded_type_ids.contains(a.type_id)) {
            s.bump("annotations_discarded_type");
        } else if (!cfg.retained_type_ids.contains(a.type_id)) {
            s.bump("annotations_unknown_type");
            unknown.insert(a.type_id);
        } else {
            kept.push_back(a);
        }
    }
    for (const auto& id : unknown) s.warnings.push_back("unknown semantic type id '" + id + "', annotations dropped");

    // canonical pick among repeats: highest accuracy, then smallest type id and name
    std::sort(kept.begin(), kept.end(), [](const TopicAnnotation& x, const TopicAnnotation& y) {
        return std::tie(x.article_external_id, x.cui, y.accuracy, x.type_id, x.preferred_name) <
               std::tie(y.article_external_id, y.cui, x.accuracy, y.type_id, y.preferred_name);
    });
    auto last = std::unique(kept.begin(), kept.end(), [](const TopicAnnotation& x, const TopicAnnotation& y) {
        return x.article_external_id == y.article_external_id && x.cui == y.cui;
    });
    s.bump("annotations_duplicate", static_cast<std::uint64_t>(std::distance(last, kept.end())));
    kept.erase(last, kept.end());
    return kept;
}

ScholGraph parse_corpus(const CorpusPaths& paths, const IngestConfig& cfg, IngestSummary* summary) {
    cfg.validate();
    IngestSummary local;
    IngestSummary& s = summary ? *summary : local;
    std::vector<std::string> f;

    // open everything first so a missing file fails before any work
    TsvReader articles_in(paths.articles, kArticlesHeader);
    TsvReader authorship_in(paths.authorship, kAuthorshipHeader);
    TsvReader citations_in(paths.citations, kCitationsHeader);
    TsvReader annotations_in(paths.annotations, kAnnotationsHeader);
    std::optional<TsvReader> journals_in;
    if (paths.journals) journals_in.emplace(*paths.journals, kJournalsHeader);

    GraphInput input;
    std::unordered_map<std::string, std::size_t> article_pos;
    std::unordered_set<std::string> seen_ids;
    std::vector<std::string> article_journal;
    while (articles_in.next(f)) {
        s.bump("articles_read");
        const std::string& id = f[0];
        if (id.empty()) articles_in.fail("empty external_id");
        if (!seen_ids.insert(id).second) {
            s.bump("articles_duplicate");
            s.warnings.push_back("duplicate article '" + id + "' at line " + std::to_string(articles_in.line()) +
                                 ", keeping the first occurrence");
            continue;
        }
        Article a;
        a.external_id = id;
        a.title = f[1];
        std::uint64_t count = 0;
        if (!parse_number(f[4], count)) articles_in.fail("bad citation_count_raw '" + f[4] + "'");
        a.citation_count_raw = count;
        if (f[2].empty()) {
            if (cfg.require_year) {
                s.bump("articles_missing_year");
                continue;
            }
            articles_in.fail("article '" + id + "' has no year");
        }
        if (!parse_number(f[2], a.year) || a.year <= 0) articles_in.fail("bad year '" + f[2] + "'");
        if (f[3].empty() && cfg.require_journal) {
            s.bump("articles_missing_journal");
            continue;
        }
        article_pos.emplace(id, input.articles.size());
        input.articles.push_back(std::move(a));
        article_journal.push_back(f[3]);
    }

    std::unordered_map<std::string, std::string> journal_names;
    if (journals_in) {
        while (journals_in->next(f)) journal_names.emplace(f[0], f[1]);
    }
    std::set<std::string> journal_ids;
    for (std::size_t i = 0; i < input.articles.size(); ++i) {
        if (article_journal[i].empty()) continue;
        input.edges.publication.emplace_back(input.articles[i].external_id, article_journal[i]);
        journal_ids.insert(article_journal[i]);
    }
    for (const auto& j : journal_ids) {
        auto it = journal_names.find(j);
        input.journals.push_back({j, it == journal_names.end() ? j : it->second});
    }

    std::unordered_map<std::string, std::string> author_names;
    std::set<std::pair<std::string, std::string>> authorship_seen;
    while (authorship_in.next(f)) {
        if (f[1].empty()) authorship_in.fail("empty author_external_id");
        if (!article_pos.contains(f[0])) {
            s.bump("authorship_unknown_article");
            continue;
        }
        if (!authorship_seen.emplace(f[0], f[1]).second) {
            s.bump("authorship_duplicate");
            continue;
        }
        author_names.emplace(f[1], f[2]);
        input.edges.authorship.emplace_back(f[0], f[1]);
    }
    for (const auto& [id, name] : author_names) input.authors.push_back({id, name});

    std::set<std::pair<std::string, std::string>> citation_seen;
    while (citations_in.next(f)) {
        if (!article_pos.contains(f[0]) || !article_pos.contains(f[1])) {
            s.bump("citations_unknown_article");
            continue;
        }
        if (f[0] == f[1]) {
            s.bump("citations_self");
            continue;
        }
        if (!citation_seen.emplace(f[0], f[1]).second) {
            s.bump("citations_duplicate");
            continue;
        }
        input.edges.citations.emplace_back(f[0], f[1]);
    }

    std::vector<TopicAnnotation> anns;
    while (annotations_in.next(f)) {
        s.bump("annotations_read");
        TopicAnnotation a{f[0], f[1], f[2], f[3], 0.0};
        if (a.cui.empty()) annotations_in.fail("empty cui");
        if (!parse_number(f[4], a.accuracy) || !(a.accuracy >= 0 && a.accuracy <= 1)) {
            annotations_in.fail("accuracy '" + f[4] + "' is not a number in [0, 1]");
        }
        if (!article_pos.contains(a.article_external_id)) {
            s.bump("annotations_unknown_article");
            continue;
        }
        anns.push_back(std::move(a));
    }
    std::map<std::string, Topic> topics;
    for (auto& a : filter_annotations(anns, cfg, &s)) {
        topics.try_emplace(a.cui, Topic{a.cui, a.type_id, a.preferred_name});
        input.articles[article_pos.at(a.article_external_id)].abstract_present = true;
        input.edges.topicality.emplace_back(a.article_external_id, a.cui);
    }
    for (auto& [cui, t] : topics) input.topics.push_back(std::move(t));

    s.bump("articles_kept", input.articles.size());
    s.bump("authors", input.authors.size());
    s.bump("journals", input.journals.size());
    s.bump("topics", input.topics.size());
    s.bump("citations_kept", input.edges.citations.size());
    s.bump("authorship_kept", input.edges.authorship.size());
    s.bump("topicality_kept", input.edges.topicality.size());

    if (input.articles.empty() && !cfg.t_current) {
        throw IngestError(IngestErrc::MalformedRecord, paths.articles.string() + ": no usable article rows");
    }
    return build_graph(std::move(input), cfg.t_current);
}

void write_corpus(const ScholGraph& g, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        auto out = open_out(dir / "articles.tsv");
        out << kArticlesHeader << '\n';
        for (std::uint32_t p = 0; p < g.article_count(); ++p) {
            const auto& a = g.article(ArticleId{p});
            const auto j = g.journal_of(ArticleId{p});
            out << a.external_id << '\t' << a.title << '\t' << a.year << '\t'
                << (j ? g.journal(*j).external_id : std::string()) << '\t' << a.citation_count_raw << '\n';
        }
    }
    {
        auto out = open_out(dir / "journals.tsv");
        out << kJournalsHeader << '\n';
        for (const auto& j : g.journals()) out << j.external_id << '\t' << j.name << '\n';
    }
    {
        auto out = open_out(dir / "authorship.tsv");
        out << kAuthorshipHeader << '\n';
        for (std::uint32_t p = 0; p < g.article_count(); ++p) {
            for (auto a : g.authors_of(ArticleId{p})) {
                out << g.article(ArticleId{p}).external_id << '\t' << g.author(a).external_id << '\t'
                    << g.author(a).name << '\n';
            }
        }
    }
    {
        auto out = open_out(dir / "citations.tsv");
        out << kCitationsHeader << '\n';
        for (const auto& c : g.citations()) {
            out << g.article(c.citing).external_id << '\t' << g.article(c.cited).external_id << '\n';
        }
    }
    {
        auto out = open_out(dir / "annotations.tsv");
        out << kAnnotationsHeader << '\n';
        for (std::uint32_t p = 0; p < g.article_count(); ++p) {
            for (auto t : g.topics_of(ArticleId{p})) {
                const auto& topic = g.topic(t);
                out << g.article(ArticleId{p}).external_id << '\t' << topic.cui << '\t' << topic.type_id << '\t'
                    << topic.preferred_name << "\t1\n";
            }
        }
    }
}

std::vector<SemanticType> read_type_table(const std::filesystem::path& path) {
    TsvReader in(path, kTypeTableHeader);
    std::vector<SemanticType> rows;
    std::vector<std::string> f;
    while (in.next(f)) {
        if (f[0].empty()) in.fail("empty type_id");
        rows.push_back({f[0], f[1], f[2]});
    }
    return rows;
}

void write_type_table(const std::filesystem::path& path, std::span<const SemanticType> rows) {
    auto out = open_out(path);
    out << kTypeTableHeader << '\n';
    for (const auto& r : rows) out << r.type_id << '\t' << r.code << '\t' << r.description << '\n';
}

namespace {

std::string padded(char prefix, std::size_t i, std::size_t n) {
    std::string digits = std::to_string(i);
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    return std::string(1, prefix) + std::string(width - std::min(width, digits.size()), '0') + digits;
}

/// k distinct values from [0, n) in ascending order.
std::vector<std::size_t> sample_distinct(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    k = std::min(k, n);
    std::set<std::size_t> picked;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (picked.size() < k) picked.insert(pick(rng));
    return {picked.begin(), picked.end()};
}

}  // namespace

ScholGraph generate_fixture(std::uint64_t seed, const FixtureParams& params) {
    std::mt19937_64 rng(seed);
    const auto& types = default_retained_types();
    GraphInput in;

    for (std::size_t i = 0; i < params.n_authors; ++i) {
        in.authors.push_back({padded('U', i, params.n_authors), "Author " + std::to_string(i)});
    }
    for (std::size_t i = 0; i < params.n_journals; ++i) {
        in.journals.push_back({padded('J', i, params.n_journals), "Journal " + std::to_string(i)});
    }
    std::uniform_int_distribution<std::size_t> type_pick(0, types.size() - 1);
    for (std::size_t i = 0; i < params.n_topics; ++i) {
        in.topics.push_back({padded('C', i, params.n_topics), types[type_pick(rng)].type_id, "Concept " + std::to_string(i)});
    }

    std::uniform_int_distribution<int> year(params.year_min, std::max(params.year_min, params.year_max));
    std::uniform_int_distribution<std::uint64_t> extra(0, 30);
    std::bernoulli_distribution has_journal(params.journal_prob);
    std::bernoulli_distribution cites(params.citation_prob);
    const std::size_t n = params.n_articles;
    std::vector<std::uint64_t> in_degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Article a;
        a.external_id = padded('P', i, n);
        a.title = "Article " + std::to_string(i);
        a.year = year(rng);
        in.articles.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pid = in.articles[i].external_id;
        if (params.n_authors > 0 && params.max_authors_per_article > 0) {
            std::uniform_int_distribution<std::size_t> count(1, params.max_authors_per_article);
            for (auto a : sample_distinct(rng, params.n_authors, count(rng))) {
                in.edges.authorship.emplace_back(pid, in.authors[a].external_id);
            }
        }
        if (params.n_journals > 0 && has_journal(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, params.n_journals - 1);
            in.edges.publication.emplace_back(pid, in.journals[pick(rng)].external_id);
        }
        if (params.n_topics > 0) {
            std::uniform_int_distribution<std::size_t> count(0, params.max_topics_per_article);
            for (auto t : sample_distinct(rng, params.n_topics, count(rng))) {
                in.edges.topicality.emplace_back(pid, in.topics[t].cui);
                in.articles[i].abstract_present = true;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && cites(rng)) {
                in.edges.citations.emplace_back(pid, in.articles[j].external_id);
                ++in_degree[j];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) in.articles[i].citation_count_raw = in_degree[i] + extra(rng);

    std::optional<int> t_current;
    if (n == 0) t_current = params.year_max;
    return build_graph(std::move(in), t_current);
}

}  // namespace scholrank
