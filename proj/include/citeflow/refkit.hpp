#pragma once

// Reference implementations used to check the production engine, plus the
// seeded synthetic DAG generator. None of this is tuned for speed.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "citeflow/analytics.hpp"
#include "citeflow/citegraph.hpp"
#include "citeflow/matrix.hpp"

namespace citeflow::refkit {

using ExactRational = mpq_class;

inline constexpr std::size_t kMaxEnumeratedPaths = 1'000'000;
inline constexpr std::size_t kMaxDenseNodes = 2000;
inline constexpr std::size_t kMaxPartitionSize = 10;

// Sum of likelihoods (product of 1/d over every node left along the path) of
// all directed paths from i to j, found by depth-first enumeration. Returns 1
// for i == j. Throws std::length_error once more than max_paths paths from i
// have been walked.
ExactRational enumerate_path_dependence(const CitationGraph& graph, NodeIndex i, NodeIndex j,
                                        std::size_t max_paths = kMaxEnumeratedPaths);

// Row i of P by enumerating every path that starts at i (same guard).
std::vector<ExactRational> enumerate_path_row(const CitationGraph& graph, NodeIndex i,
                                              std::size_t max_paths = kMaxEnumeratedPaths);

// Number of directed paths starting at each node (saturating at max_paths + 1).
std::vector<std::size_t> path_counts(const CitationGraph& graph, std::size_t max_paths = kMaxEnumeratedPaths);

// Exact P for graphs whose path counts are out of reach for enumeration.
// Sums the same path likelihoods, grouping paths by their first edge and
// reusing the exact suffix sums of already finished nodes.
std::vector<std::vector<ExactRational>> exact_path_dependence(const CitationGraph& graph);

// P = (I - DA)^-1 in floating point: permute to topological order, build the
// unit upper-triangular I - DA and invert it by back-substitution.
// Throws std::length_error above kMaxDenseNodes nodes.
DenseMatrix dense_dependence(const CitationGraph& graph);

struct PartitionOptimum {
    Partition partition; // restricted growth string, communities by first appearance
    double modularity = 0.0;
};

// Evaluates every set partition. Ties within 1e-12 go to the lexicographically
// smallest restricted growth string. Throws std::length_error above k_max.
PartitionOptimum exhaustive_modularity(const DisciplineNetwork& net,
                                       std::size_t k_max = kMaxPartitionSize);

struct SynthSpec {
    std::size_t n = 1;
    std::size_t target_m = 0;
    std::size_t k = 1;
    std::uint64_t seed = 0;
    std::size_t month_span = 120;
};

struct MembershipRow {
    std::string id;
    std::string discipline;
    double weight = 1.0;
};

struct SynthRecords {
    NodeTable nodes;
    std::vector<EdgeRecord> edges;
    std::vector<MembershipRow> membership;
    std::vector<std::string> warnings;
};

// Throws InputError on an invalid spec.
SynthRecords random_dag_records(const SynthSpec& spec);

struct SynthGraph {
    CitationGraph graph;
    Membership membership;
    IngestReport report;
    std::vector<std::string> warnings;
};

SynthGraph random_dag(const SynthSpec& spec);

} // namespace citeflow::refkit
