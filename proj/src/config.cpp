#include "scholrank/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace scholrank {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        auto item = trim(std::string_view(s).substr(start, comma - start));
        if (!item.empty()) out.push_back(std::move(item));
        start = comma + 1;
    }
    return out;
}

class Entry {
public:
    Entry(std::string key, std::string value, std::size_t line)
        : key_(std::move(key)), value_(std::move(value)), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("line " + std::to_string(line_) + ": " + key_ + ": " + what);
    }

    template <class T>
    T number() const {
        T out{};
        const auto* end = value_.data() + value_.size();
        auto [ptr, ec] = std::from_chars(value_.data(), end, out);
        if (ec != std::errc{} || ptr != end) fail("expected a number, got '" + value_ + "'");
        return out;
    }

    bool boolean() const {
        if (value_ == "true" || value_ == "1" || value_ == "yes") return true;
        if (value_ == "false" || value_ == "0" || value_ == "no") return false;
        fail("expected true or false, got '" + value_ + "'");
    }

    const std::string& text() const { return value_; }

private:
    std::string key_;
    std::string value_;
    std::size_t line_;
};

std::set<std::string> type_ids_from(const std::filesystem::path& path) {
    std::set<std::string> ids;
    for (const auto& r : read_type_table(path)) ids.insert(r.type_id);
    return ids;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<Setting> RunConfig::settings() const {
    std::vector<Setting> out;
    for (const auto& name : presets) out.push_back(load_preset(name));
    for (const auto& s : inline_settings) out.push_back(s);
    for (auto& s : out) {
        s.max_iters = max_iters;
        s.tol = tol;
    }
    return out;
}

RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
    };
    std::optional<std::filesystem::path> input_dir;
    std::optional<std::filesystem::path> articles, authorship, citations, annotations, journals;
    std::optional<std::string> profile;
    std::vector<std::pair<std::string, Entry>> deferred;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const Entry e(key, trim(std::string_view(line).substr(eq + 1)), lineno);

        if (key == "input.dir") input_dir = resolve(e.text());
        else if (key == "input.articles") articles = resolve(e.text());
        else if (key == "input.authorship") authorship = resolve(e.text());
        else if (key == "input.citations") citations = resolve(e.text());
        else if (key == "input.annotations") annotations = resolve(e.text());
        else if (key == "input.journals") journals = resolve(e.text());
        else if (key == "ingest.profile") profile = e.text();
        else if (key.starts_with("ingest.")) deferred.emplace_back(key, e);  // applied after the profile
        else if (key == "weighting.alpha_n") cfg.similarity.alpha_n = e.number<double>();
        else if (key == "weighting.beta_n") cfg.similarity.beta_n = e.number<double>();
        else if (key == "weighting.gamma_n") cfg.similarity.gamma_n = e.number<double>();
        else if (key == "weighting.lambda") cfg.similarity.lambda = e.number<double>();
        else if (key == "weighting.author_overlap") {
            if (e.text() == "intersection") cfg.similarity.author_overlap = AuthorOverlap::Intersection;
            else if (e.text() == "union") cfg.similarity.author_overlap = AuthorOverlap::Union;
            else e.fail("expected intersection or union");
        } else if (key == "weighting.dump") cfg.dump_weights = e.boolean();
        else if (key == "time.hub_base") cfg.time.hub_base = e.number<double>();
        else if (key == "time.hub_direction") {
            if (e.text() == "decay") cfg.time.hub_direction = HubTimeDirection::Decay;
            else if (e.text() == "growth") cfg.time.hub_direction = HubTimeDirection::Growth;
            else e.fail("expected decay or growth");
        } else if (key == "time.authority_b") cfg.time.authority_b = e.number<double>();
        else if (key == "time.time_value_p") cfg.time.time_value_p = e.number<double>();
        else if (key == "rank.presets") cfg.presets = split_list(e.text());
        else if (key == "rank.max_iters") cfg.max_iters = e.number<int>();
        else if (key == "rank.tol") cfg.tol = e.number<double>();
        else if (key == "rank.renormalize") cfg.renormalize = e.boolean();
        else if (key == "rank.workers") cfg.workers = e.number<unsigned>();
        else if (key == "rank.bundle") cfg.bundle_dir = resolve(e.text());
        else if (key.starts_with("setting.")) {
            auto values = split_list(e.text());
            if (values.size() != 6) e.fail("expected alpha,beta,gamma,delta,omega,sigma");
            Setting s;
            s.name = key.substr(8);
            double* fields[] = {&s.alpha, &s.beta, &s.gamma, &s.delta, &s.omega, &s.sigma};
            for (std::size_t i = 0; i < 6; ++i) *fields[i] = Entry(key, values[i], lineno).number<double>();
            cfg.inline_settings.push_back(std::move(s));
        } else if (key == "output.dir") cfg.out_dir = resolve(e.text());
        else if (key == "fixture.seed") cfg.seed = e.number<std::uint64_t>();
        else if (key == "fixture.articles") cfg.fixture.n_articles = e.number<std::size_t>();
        else if (key == "fixture.authors") cfg.fixture.n_authors = e.number<std::size_t>();
        else if (key == "fixture.journals") cfg.fixture.n_journals = e.number<std::size_t>();
        else if (key == "fixture.topics") cfg.fixture.n_topics = e.number<std::size_t>();
        else if (key == "fixture.citation_prob") cfg.fixture.citation_prob = e.number<double>();
        else if (key == "fixture.journal_prob") cfg.fixture.journal_prob = e.number<double>();
        else if (key == "fixture.max_authors") cfg.fixture.max_authors_per_article = e.number<std::size_t>();
        else if (key == "fixture.max_topics") cfg.fixture.max_topics_per_article = e.number<std::size_t>();
        else if (key == "fixture.year_min") cfg.fixture.year_min = e.number<int>();
        else if (key == "fixture.year_max") cfg.fixture.year_max = e.number<int>();
        else if (key == "compare.k") cfg.k = e.number<std::size_t>();
        else e.fail("unknown key");
    }

    if (profile) {
        if (*profile == "default") cfg.ingest = IngestConfig::defaults();
        else if (*profile == "cord19") cfg.ingest = IngestConfig::cord19_profile();
        else throw ConfigError("ingest.profile: expected default or cord19");
    }
    for (const auto& [key, e] : deferred) {
        if (key == "ingest.min_citations") cfg.ingest.min_citation_threshold = e.number<std::uint64_t>();
        else if (key == "ingest.accuracy_threshold") cfg.ingest.accuracy_threshold = e.number<double>();
        else if (key == "ingest.require_year") cfg.ingest.require_year = e.boolean();
        else if (key == "ingest.require_journal") cfg.ingest.require_journal = e.boolean();
        else if (key == "ingest.retained_type_ids") cfg.ingest.retained_type_ids = type_ids_from(resolve(e.text()));
        else if (key == "ingest.discarded_type_ids") cfg.ingest.discarded_type_ids = type_ids_from(resolve(e.text()));
        else if (key == "ingest.t_current") cfg.ingest.t_current = e.number<int>();
        else e.fail("unknown key");
    }

    if (input_dir) cfg.corpus = CorpusPaths::in_directory(*input_dir);
    if (articles) cfg.corpus.articles = *articles;
    if (authorship) cfg.corpus.authorship = *authorship;
    if (citations) cfg.corpus.citations = *citations;
    if (annotations) cfg.corpus.annotations = *annotations;
    if (journals) cfg.corpus.journals = *journals;
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::stringstream text;
    text << in.rdbuf();
    return parse_run_config(text.str(), path.parent_path());
}

void write_manifest(std::ostream& out, const RunConfig& cfg) {
    const auto& ing = cfg.ingest;
    auto join = [](const std::set<std::string>& ids) {
        std::string s;
        for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
        return s;
    };
    out << "# ingest\n";
    out << "ingest.min_citations = " << ing.min_citation_threshold << '\n';
    out << "ingest.accuracy_threshold = " << fmt_double(ing.accuracy_threshold) << '\n';
    out << "ingest.require_year = " << (ing.require_year ? "true" : "false") << '\n';
    out << "ingest.require_journal = " << (ing.require_journal ? "true" : "false") << '\n';
    if (ing.t_current) out << "ingest.t_current = " << *ing.t_current << '\n';
    out << "# retained type ids: " << join(ing.retained_type_ids) << '\n';
    out << "# discarded type ids: " << join(ing.discarded_type_ids) << '\n';
    out << "# weighting\n";
    out << "weighting.alpha_n = " << fmt_double(cfg.similarity.alpha_n) << '\n';
    out << "weighting.beta_n = " << fmt_double(cfg.similarity.beta_n) << '\n';
    out << "weighting.gamma_n = " << fmt_double(cfg.similarity.gamma_n) << '\n';
    out << "weighting.lambda = " << fmt_double(cfg.similarity.lambda) << '\n';
    out << "weighting.author_overlap = "
        << (cfg.similarity.author_overlap == AuthorOverlap::Intersection ? "intersection" : "union") << '\n';
    out << "# time\n";
    out << "time.hub_base = " << fmt_double(cfg.time.hub_base) << '\n';
    out << "time.hub_direction = " << (cfg.time.hub_direction == HubTimeDirection::Decay ? "decay" : "growth") << '\n';
    out << "time.authority_b = " << fmt_double(cfg.time.authority_b) << '\n';
    out << "time.time_value_p = " << fmt_double(cfg.time.time_value_p) << '\n';
    out << "# ranking\n";
    out << "rank.max_iters = " << cfg.max_iters << '\n';
    out << "rank.tol = " << fmt_double(cfg.tol) << '\n';
    out << "rank.renormalize = " << (cfg.renormalize ? "true" : "false") << '\n';
    std::string names;
    for (const auto& p : cfg.presets) names += (names.empty() ? "" : ", ") + p;
    out << "rank.presets = " << names << '\n';
    for (const auto& s : cfg.inline_settings) {
        out << "setting." << s.name << " = " << fmt_double(s.alpha) << ',' << fmt_double(s.beta) << ','
            << fmt_double(s.gamma) << ',' << fmt_double(s.delta) << ',' << fmt_double(s.omega) << ','
            << fmt_double(s.sigma) << '\n';
    }
    out << "compare.k = " << cfg.k << '\n';
}

}  // namespace scholrank
