#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "scholrank/graph.hpp"
#include "scholrank/ingest.hpp"

namespace scholrank::testing {

// Three articles: P2->P1, P3->P1, P3->P2. Frozen reference values in the tests come
// from tests/oracles/tri_fixture.py.
inline GraphInput tri_input() {
    GraphInput in;
    in.articles = {{"P1", "first", 2020, true, 30}, {"P2", "second", 2021, true, 25}, {"P3", "third", 2021, true, 5}};
    in.authors = {{"a1", "Ada"}, {"a2", "Bo"}};
    in.journals = {{"j1", "J One"}, {"j2", "J Two"}};
    in.topics = {{"t1", "T116", "protein"}, {"t2", "T047", "disease"}, {"t3", "T121", "drug"}};
    in.edges.citations = {{"P2", "P1"}, {"P3", "P1"}, {"P3", "P2"}};
    in.edges.authorship = {{"P1", "a1"}, {"P2", "a1"}, {"P2", "a2"}, {"P3", "a2"}};
    in.edges.publication = {{"P1", "j1"}, {"P3", "j1"}, {"P2", "j2"}};
    in.edges.topicality = {{"P1", "t1"}, {"P2", "t1"}, {"P3", "t1"}, {"P2", "t2"}, {"P3", "t2"}, {"P1", "t3"}};
    return in;
}

inline ScholGraph tri_graph() { return build_graph(tri_input()); }

inline ArticleId art(const ScholGraph& g, const std::string& id) { return *g.find_article(id); }

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("scholrank_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace scholrank::testing
