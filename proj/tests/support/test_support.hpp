#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "citeflow/citegraph.hpp"
#include "citeflow/refkit.hpp"

namespace citeflow::testing {

inline std::filesystem::path data_dir() { return CITEFLOW_TEST_DATA_DIR; }
inline std::filesystem::path fix7_dir() { return data_dir() / "fix7"; }
inline std::filesystem::path golden_dir() { return CITEFLOW_GOLDEN_DIR; }

struct Loaded {
    CitationGraph graph;
    IngestReport report;
    Membership membership;
    std::vector<std::string> warnings;
};

inline Loaded load_text(const std::string& nodes, const std::string& edges,
                        const std::string& membership) {
    std::istringstream ns(nodes), es(edges), ms(membership);
    auto table = parse_nodes(ns);
    auto list = parse_edges(es);
    auto [g, rep] = build_graph(table, list);
    std::vector<std::string> warnings;
    auto q = parse_membership(ms, g, warnings);
    return {std::move(g), std::move(rep), std::move(q), std::move(warnings)};
}

inline const std::string kFix7Nodes =
    "id,year,month\n1,2016,5\n2,2016,1\n3,2015,9\n4,2015,5\n5,2015,1\n6,2014,5\n7,2014,1\n";
inline const std::string kFix7Edges = "citing,cited\n1,2\n1,3\n2,4\n2,5\n3,5\n4,6\n5,6\n5,7\n";
inline const std::string kFix7Membership =
    "id,discipline,weight\n1,X,1\n2,X,1\n4,X,1\n3,Y,1\n5,Y,1\n6,Z,1\n7,Z,1\n";

inline Loaded fix7() { return load_text(kFix7Nodes, kFix7Edges, kFix7Membership); }

// Chain of `length` nodes named n0 -> n1 -> ..., single discipline.
inline Loaded chain(std::size_t length) {
    std::string nodes = "id,year,month\n", edges = "citing,cited\n", member = "id,discipline,weight\n";
    for (std::size_t i = 0; i < length; ++i) {
        nodes += "n" + std::to_string(i) + "," + std::to_string(2100 - static_cast<int>(i)) + ",1\n";
        member += "n" + std::to_string(i) + ",A,1\n";
        if (i + 1 < length) edges += "n" + std::to_string(i) + ",n" + std::to_string(i + 1) + "\n";
    }
    return load_text(nodes, edges, member);
}

inline NodeIndex idx(const CitationGraph& g, const std::string& id) { return *g.index_of(id); }

inline double to_double(const refkit::ExactRational& q) { return q.get_d(); }

// Seeded random DAG for property tests.
inline refkit::SynthGraph random_case(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t k,
                                      std::size_t months = 24) {
    return refkit::random_dag({n, m, k, seed, months});
}

} // namespace citeflow::testing
