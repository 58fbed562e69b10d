#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "citeflow/analytics.hpp"

namespace citeflow {

DenseMatrix DisciplineNetwork::adjacency() const {
    DenseMatrix a(size, size);
    for (const auto& e : edges) {
        a(e.u, e.v) += e.weight;
        a(e.v, e.u) += e.weight;
    }
    return a;
}

double nearest_rank_percentile(std::vector<double> sample, double pct) {
    if (sample.empty()) throw std::invalid_argument("percentile of an empty sample");
    if (!(pct >= 0.0 && pct <= 100.0)) throw std::invalid_argument("percentile outside 0..100");
    std::sort(sample.begin(), sample.end());
    const auto n = sample.size();
    auto rank = static_cast<std::size_t>(std::ceil(pct * static_cast<double>(n) / 100.0));
    rank = std::clamp<std::size_t>(rank, 1, n);
    return sample[rank - 1];
}

ThresholdedNetworks threshold_network(const DenseMatrix& normalized, double hi_pct, double lo_pct) {
    if (!(hi_pct > lo_pct)) throw std::invalid_argument("hi percentile must exceed lo percentile");
    const auto k = normalized.rows();
    ThresholdedNetworks out;
    out.positive.size = k;
    out.negative.size = k;
    if (k < 2) return out;

    std::vector<double> pair_values;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) pair_values.push_back(normalized(u, v) + normalized(v, u));

    out.hi_cutoff = nearest_rank_percentile(pair_values, hi_pct);
    out.lo_cutoff = nearest_rank_percentile(pair_values, lo_pct);

    std::size_t p = 0;
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v, ++p) {
            const auto w = pair_values[p];
            if (w >= out.hi_cutoff) out.positive.edges.push_back({u, v, std::max(w, 0.0)});
            if (w <= out.lo_cutoff) out.negative.edges.push_back({u, v, std::max(-w, 0.0)});
        }
    }
    return out;
}

std::vector<double> betweenness_centrality(const DisciplineNetwork& net, BetweennessMode mode) {
    const auto k = net.size;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(k);
    for (const auto& e : net.edges) {
        if (!(e.weight > 0.0)) continue;
        const double len = mode == BetweennessMode::Weighted ? 1.0 / e.weight : 1.0;
        adj[e.u].emplace_back(e.v, len);
        adj[e.v].emplace_back(e.u, len);
    }

    std::vector<double> centrality(k, 0.0);
    const auto inf = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<std::size_t> settled;
        std::vector<std::vector<std::size_t>> preds(k);
        std::vector<double> sigma(k, 0.0), dist(k, inf), delta(k, 0.0);
        sigma[s] = 1.0;
        dist[s] = 0.0;

        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
        frontier.emplace(0.0, s);
        std::vector<bool> done(k, false);
        while (!frontier.empty()) {
            const auto [d, v] = frontier.top();
            frontier.pop();
            if (done[v]) continue;
            done[v] = true;
            settled.push_back(v);
            for (const auto& [w, len] : adj[v]) {
                const auto nd = d + len;
                if (nd < dist[w]) {
                    dist[w] = nd;
                    sigma[w] = sigma[v];
                    preds[w] = {v};
                    frontier.emplace(nd, w);
                } else if (nd == dist[w] && !done[w]) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = settled.rbegin(); it != settled.rend(); ++it) {
            const auto w = *it;
            for (const auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) centrality[w] += delta[w];
        }
    }
    // every unordered pair was counted from both endpoints
    for (auto& c : centrality) c /= 2.0;
    return centrality;
}

} // namespace citeflow
