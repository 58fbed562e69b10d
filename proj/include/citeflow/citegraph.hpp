#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "citeflow/matrix.hpp"

namespace citeflow {

using NodeIndex = std::uint32_t;

struct PubTime {
    int year = 0;
    int month = 1;

    auto operator<=>(const PubTime&) const = default;
};

struct NodeRecord {
    std::string id;
    PubTime time;
};

struct NodeTable {
    std::vector<NodeRecord> nodes;
    std::vector<std::string> warnings;
};

struct EdgeRecord {
    std::string citing;
    std::string cited;
    std::size_t line = 0; // 1-based line in the source file, 0 if synthetic
};

struct IngestReport {
    std::size_t nodes_read = 0;
    std::size_t edges_read = 0;
    std::size_t synchronous_edges_discarded = 0;
    std::size_t duplicate_edges_discarded = 0;
    std::vector<std::string> warnings;
};

// Immutable citation DAG. Edges point from citing to cited publication and
// always go strictly back in time, so the graph is acyclic by construction.
// Out-neighbours of each node are stored in ascending index order.
class CitationGraph {
public:
    std::size_t node_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return cited_.size(); }

    const std::string& id(NodeIndex i) const { return ids_[i]; }
    std::span<const std::string> ids() const noexcept { return ids_; }
    PubTime time(NodeIndex i) const { return times_[i]; }
    std::optional<NodeIndex> index_of(std::string_view id) const;

    std::size_t out_degree(NodeIndex i) const noexcept { return row_ptr_[i + 1] - row_ptr_[i]; }
    std::span<const NodeIndex> cited_by(NodeIndex i) const noexcept {
        return {cited_.data() + row_ptr_[i], out_degree(i)};
    }
    std::span<const std::size_t> row_offsets() const noexcept { return row_ptr_; }
    std::span<const NodeIndex> cited_indices() const noexcept { return cited_; }

private:
    friend std::pair<CitationGraph, IngestReport> build_graph(const NodeTable&,
                                                              const std::vector<EdgeRecord>&);

    std::vector<std::string> ids_;
    std::vector<PubTime> times_;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<NodeIndex> cited_;
    std::unordered_map<std::string, NodeIndex> index_;
};

// Row-stochastic publication -> discipline weights (Q).
struct Membership {
    std::vector<std::string> labels;
    SparseRowMatrix weights; // n x k

    std::size_t discipline_count() const noexcept { return labels.size(); }
    // Column sums of the weights: fractional publication count per discipline.
    std::vector<double> sizes() const;
    DenseMatrix dense() const { return weights.to_dense(); }
};

inline constexpr std::string_view kUnclassifiedLabel = "__unclassified__";

NodeTable parse_nodes(std::istream& in);
NodeTable parse_nodes(const std::filesystem::path& path);

std::vector<EdgeRecord> parse_edges(std::istream& in);
std::vector<EdgeRecord> parse_edges(const std::filesystem::path& path);

// Drops synchronous (same or older) citations and duplicate edges.
// Throws InputError on unknown endpoints or an empty node table.
std::pair<CitationGraph, IngestReport> build_graph(const NodeTable& nodes,
                                                   const std::vector<EdgeRecord>& edges);

// Kahn's algorithm; among ready nodes the smallest external id goes first.
std::vector<NodeIndex> topological_order(const CitationGraph& graph);

// Maximum number of edges on any directed path.
std::size_t longest_path_length(const CitationGraph& graph);

// Per node: number of edges on the longest path starting there.
std::vector<std::size_t> path_heights(const CitationGraph& graph);

Membership parse_membership(std::istream& in, const CitationGraph& graph,
                            std::vector<std::string>& warnings);
Membership parse_membership(const std::filesystem::path& path, const CitationGraph& graph,
                            std::vector<std::string>& warnings);

// Builds Q from (publication, discipline, weight) triples already resolved to
// indices. Shared by the CSV reader and the synthetic generator.
struct MembershipEntry {
    NodeIndex node;
    std::string discipline;
    double weight;
};
Membership make_membership(const CitationGraph& graph, const std::vector<MembershipEntry>& entries,
                           std::vector<std::string>& warnings);

} // namespace citeflow
