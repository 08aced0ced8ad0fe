#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scholrank {

enum class FetchErrc { ServiceUnavailable, QuotaExceeded, MalformedResponse, InvalidConfig };

class FetchError : public std::runtime_error {
public:
    FetchError(FetchErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    FetchErrc code() const noexcept { return code_; }

private:
    FetchErrc code_;
};

/// Spaces calls at least 1/rate seconds apart. Not thread-safe; one per client.
class RateLimiter {
public:
    explicit RateLimiter(double requests_per_second);

    /// Blocks until the next request may start.
    void acquire();

private:
    std::chrono::steady_clock::duration interval_;
    std::optional<std::chrono::steady_clock::time_point> last_;
};

struct FetchConfig {
    /// scheme://host[:port]
    std::string endpoint = "https://api.semanticscholar.org";
    /// {id}, {offset} and {limit} are substituted per request.
    std::string path_template = "/graph/v1/paper/{id}/references?fields=paperId&offset={offset}&limit={limit}";
    std::size_t page_size = 100;
    double rate_limit = 1.0;  // requests per second
    int max_retries = 5;
    std::chrono::milliseconds backoff_base{500};
    std::chrono::milliseconds backoff_cap{30'000};
    std::chrono::seconds timeout{30};
    std::string api_key;  // sent as x-api-key when non-empty
    /// Last fully fetched id; ids up to and including it are skipped on the next run.
    std::optional<std::filesystem::path> cursor_path;
};

struct FetchStats {
    std::size_t requests = 0;
    std::size_t retries = 0;
    std::size_t skipped_by_cursor = 0;
};

using CitationPair = std::pair<std::string, std::string>;  // (citing, cited)

/// Lists the references of each id and keeps the pairs whose cited id is also requested.
///
/// Requests are sequential under the rate limit. 429 and 5xx responses and connection failures
/// are retried with capped exponential backoff; once retries run out a 429 raises QuotaExceeded and
/// anything else ServiceUnavailable. A 404 means the service does not know the id (no references).
std::vector<CitationPair> fetch_citations(const std::vector<std::string>& article_ids, const FetchConfig& cfg,
                                          FetchStats* stats = nullptr);

}  // namespace scholrank
