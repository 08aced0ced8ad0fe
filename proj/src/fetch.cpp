#include "scholrank/fetch.hpp"

#include <algorithm>
#include <fstream>
#include <thread>
#include <unordered_set>

#include <httplib.h>
#include <json.hpp>

namespace scholrank {

RateLimiter::RateLimiter(double requests_per_second) {
    if (!(requests_per_second > 0)) throw FetchError(FetchErrc::InvalidConfig, "rate limit must be > 0");
    interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(1.0 / requests_per_second));
}

void RateLimiter::acquire() {
    const auto now = std::chrono::steady_clock::now();
    if (last_ && now < *last_ + interval_) std::this_thread::sleep_until(*last_ + interval_);
    last_ = std::chrono::steady_clock::now();
}

namespace {

std::string percent_encode(const std::string& s) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' || c == ':') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

void replace_all(std::string& s, const std::string& key, const std::string& value) {
    for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size())) {
        s.replace(pos, key.size(), value);
    }
}

std::optional<std::string> read_cursor(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string id;
    if (in && std::getline(in, id) && !id.empty()) return id;
    return std::nullopt;
}

void write_cursor(const std::filesystem::path& path, const std::string& id) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw FetchError(FetchErrc::InvalidConfig, "cannot write cursor " + tmp.string());
        out << id << '\n';
    }
    std::filesystem::rename(tmp, path);
}

struct Page {
    std::vector<std::string> cited;
    std::optional<std::size_t> next;
};

Page parse_page(const std::string& body, const std::string& id) {
    Page page;
    try {
        auto doc = nlohmann::json::parse(body);
        const auto& data = doc.at("data");
        if (!data.is_array()) throw FetchError(FetchErrc::MalformedResponse, "'data' is not an array for " + id);
        for (const auto& item : data) {
            const auto& paper = item.contains("citedPaper") ? item.at("citedPaper") : item;
            const auto& pid = paper.at("paperId");
            if (pid.is_string()) page.cited.push_back(pid.get<std::string>());  // null ids are unresolved references
        }
        if (doc.contains("next") && doc.at("next").is_number_unsigned()) page.next = doc.at("next").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw FetchError(FetchErrc::MalformedResponse, "bad reference listing for " + id + ": " + e.what());
    }
    return page;
}

class Client {
public:
    Client(const FetchConfig& cfg, FetchStats& stats) : cfg_(cfg), stats_(stats), limiter_(cfg.rate_limit), http_(cfg.endpoint) {
        if (!http_.is_valid()) throw FetchError(FetchErrc::InvalidConfig, "bad endpoint '" + cfg.endpoint + "'");
        http_.set_connection_timeout(cfg.timeout);
        http_.set_read_timeout(cfg.timeout);
        if (!cfg.api_key.empty()) http_.set_default_headers({{"x-api-key", cfg.api_key}});
    }

    /// Body of a 200 response, or nullopt for 404.
    std::optional<std::string> get(const std::string& path) {
        for (int attempt = 0;; ++attempt) {
            limiter_.acquire();
            ++stats_.requests;
            auto res = http_.Get(path);
            std::chrono::milliseconds wait{0};
            bool quota = false;
            std::string why;
            if (!res) {
                why = "connection failed (" + httplib::to_string(res.error()) + ")";
            } else if (res->status == 200) {
                return res->body;
            } else if (res->status == 404) {
                return std::nullopt;
            } else if (res->status == 429) {
                quota = true;
                why = "HTTP 429";
                if (res->has_header("Retry-After")) {
                    try {
                        wait = std::chrono::seconds(std::stoi(res->get_header_value("Retry-After")));
                    } catch (const std::exception&) {
                    }
                }
            } else if (res->status >= 500) {
                why = "HTTP " + std::to_string(res->status);
            } else {
                throw FetchError(FetchErrc::ServiceUnavailable, "HTTP " + std::to_string(res->status) + " for " + path);
            }
            if (attempt >= cfg_.max_retries) {
                throw FetchError(quota ? FetchErrc::QuotaExceeded : FetchErrc::ServiceUnavailable,
                                 why + " for " + path + " after " + std::to_string(attempt + 1) + " attempts");
            }
            ++stats_.retries;
            const std::chrono::milliseconds scaled = cfg_.backoff_base * (std::int64_t{1} << std::min(attempt, 30));
            const auto backoff = std::min(cfg_.backoff_cap, scaled);
            std::this_thread::sleep_for(std::max(backoff, std::min(wait, cfg_.backoff_cap)));
        }
    }

private:
    const FetchConfig& cfg_;
    FetchStats& stats_;
    RateLimiter limiter_;
    httplib::Client http_;
};

}  // namespace

std::vector<CitationPair> fetch_citations(const std::vector<std::string>& article_ids, const FetchConfig& cfg,
                                          FetchStats* stats) {
    FetchStats local;
    FetchStats& st = stats ? *stats : local;
    if (cfg.page_size == 0) throw FetchError(FetchErrc::InvalidConfig, "page size must be > 0");
    if (article_ids.empty()) return {};

    std::size_t start = 0;
    if (cfg.cursor_path) {
        if (auto done = read_cursor(*cfg.cursor_path)) {
            auto it = std::find(article_ids.begin(), article_ids.end(), *done);
            if (it != article_ids.end()) start = static_cast<std::size_t>(it - article_ids.begin()) + 1;
        }
    }
    st.skipped_by_cursor = start;
    if (start == article_ids.size()) return {};

    const std::unordered_set<std::string> wanted(article_ids.begin(), article_ids.end());
    Client client(cfg, st);
    std::vector<CitationPair> out;
    for (std::size_t i = start; i < article_ids.size(); ++i) {
        const auto& id = article_ids[i];
        std::size_t offset = 0;
        while (true) {
            std::string path = cfg.path_template;
            replace_all(path, "{id}", percent_encode(id));
            replace_all(path, "{offset}", std::to_string(offset));
            replace_all(path, "{limit}", std::to_string(cfg.page_size));
            auto body = client.get(path);
            if (!body) break;
            auto page = parse_page(*body, id);
            for (auto& cited : page.cited) {
                if (cited != id && wanted.contains(cited)) out.emplace_back(id, std::move(cited));
            }
            if (!page.next || *page.next <= offset) break;
            offset = *page.next;
        }
        if (cfg.cursor_path) write_cursor(*cfg.cursor_path, id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace scholrank
