#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scholrank/ingest.hpp"
#include "scholrank/ranking.hpp"
#include "scholrank/weighting.hpp"

namespace scholrank {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run needs. Loaded from a `section.key = value` file.
struct RunConfig {
    CorpusPaths corpus;
    IngestConfig ingest = IngestConfig::defaults();
    SimilarityCoeffs similarity;
    TimeParams time;

    std::vector<std::string> presets;     // names from the built-in table
    std::vector<Setting> inline_settings;  // setting.<name> = alpha,beta,gamma,delta,omega,sigma
    int max_iters = 100;
    double tol = 1e-8;
    bool renormalize = true;
    unsigned workers = 1;
    bool dump_weights = false;

    std::filesystem::path out_dir = "out";
    std::optional<std::filesystem::path> bundle_dir;  // defaults to <out>/graph

    std::uint64_t seed = 1;
    FixtureParams fixture;

    std::size_t k = 100;

    std::filesystem::path graph_bundle() const { return bundle_dir ? *bundle_dir : out_dir / "graph"; }
    /// Requested settings in order: presets first, then inline ones. Throws RankingError on unknown presets.
    std::vector<Setting> settings() const;
};

/// Parses a config file; relative paths resolve against the file's directory.
RunConfig load_run_config(const std::filesystem::path& path);
/// Parses config text; relative paths resolve against `base_dir`.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir = {});

/// Writes every parameter that affects results in the config format (reloadable).
void write_manifest(std::ostream& out, const RunConfig& cfg);

}  // namespace scholrank
