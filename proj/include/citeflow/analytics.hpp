#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "citeflow/dependence.hpp"
#include "citeflow/matrix.hpp"

namespace citeflow {

enum class NormKind { EntrywiseL1, Frobenius };

double matrix_norm(const DenseMatrix& m, NormKind kind);

struct OrderContribution {
    std::size_t order = 0;
    double norm = 0.0;
    double share = 0.0;
};

struct OrderContributions {
    NormKind kind = NormKind::EntrywiseL1;
    std::vector<OrderContribution> orders; // empty when there is no flow beyond order 0
};

// Shares of ||M(i)|| over orders i >= 1. The order-0 identity flow is not
// part of the denominator.
OrderContributions order_contributions(const FlowDecomposition& flows, NormKind kind);

// E_ij = rowsum_i * colsum_j / total. Throws std::invalid_argument on a zero total.
DenseMatrix expected_flow(const DenseMatrix& flow);

struct NormalizedFlow {
    DenseMatrix expected;
    DenseMatrix normalized; // signed chi-squared residuals, 0 where E is 0
};

NormalizedFlow normalized_flow(const DenseMatrix& flow);

struct WeightedEdge {
    std::size_t u = 0; // u < v
    std::size_t v = 0;
    double weight = 0.0;

    bool operator==(const WeightedEdge&) const = default;
};

// Undirected, no self-loops, edges sorted by (u, v).
struct DisciplineNetwork {
    std::size_t size = 0;
    std::vector<WeightedEdge> edges;

    DenseMatrix adjacency() const;
};

struct ThresholdedNetworks {
    DisciplineNetwork positive;
    DisciplineNetwork negative;
    double hi_cutoff = 0.0;
    double lo_cutoff = 0.0;
};

// Nearest-rank percentile of a sample (0 <= pct <= 100). Sample must be nonempty.
double nearest_rank_percentile(std::vector<double> sample, double pct);

// Symmetrizes w_uv = F^_uv + F^_vu and keeps pairs at or above the hi_pct
// percentile (positive network, weight max(w, 0)) and at or below the lo_pct
// percentile (negative network, weight max(-w, 0)).
ThresholdedNetworks threshold_network(const DenseMatrix& normalized, double hi_pct, double lo_pct);

// community id per discipline, numbered in order of each community's smallest member
using Partition = std::vector<std::size_t>;

// Weighted Newman modularity of a partition.
double modularity(const DisciplineNetwork& net, const Partition& partition);

struct CommunityResult {
    Partition partition;
    double modularity = 0.0;
    std::vector<double> merge_gains; // gain of each merge performed, in order
};

// Greedy agglomerative modularity maximization (fast greedy). Merges the pair
// with the largest positive gain; ties go to the lexicographically smallest
// pair of community representatives (smallest member index).
CommunityResult detect_communities(const DisciplineNetwork& net);

// Renumbers an arbitrary labelling so communities are numbered by first appearance.
Partition canonical_partition(const Partition& labels);

enum class BetweennessMode { Unweighted, Weighted };

// Brandes betweenness, unnormalized, undirected. Only edges with positive
// weight are part of the topology. Weighted mode uses 1/weight as edge length.
std::vector<double> betweenness_centrality(const DisciplineNetwork& net,
                                           BetweennessMode mode = BetweennessMode::Unweighted);

struct IncomingShares {
    DenseMatrix shares;              // column-stochastic where the column has flow
    std::vector<bool> empty_columns; // columns without incoming flow
};

IncomingShares incoming_shares(const DenseMatrix& flow);

DenseMatrix cosine_similarity(const DenseMatrix& flow);

struct RaoScores {
    IncomingShares incoming;
    DenseMatrix distance; // 1 - cosine similarity
    std::vector<double> scores;
};

RaoScores rao_entropy(const DenseMatrix& flow);

struct DisciplineSummary {
    double size = 0.0;
    double self_flow = 0.0;
    double incoming_flow = 0.0;
    double outgoing_flow = 0.0;
};

std::vector<DisciplineSummary> discipline_summary(const DenseMatrix& flow,
                                                  const std::vector<double>& sizes);

} // namespace citeflow
