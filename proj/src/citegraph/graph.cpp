#include <functional>
#include <queue>

#include "citeflow/citegraph.hpp"
#include "citeflow/errors.hpp"

namespace citeflow {

std::optional<NodeIndex> CitationGraph::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<NodeIndex> topological_order(const CitationGraph& graph) {
    const auto n = graph.node_count();
    std::vector<std::size_t> in_degree(n, 0);
    for (const auto j : graph.cited_indices()) ++in_degree[j];

    auto later_id = [&](NodeIndex a, NodeIndex b) { return graph.id(a) > graph.id(b); };
    std::priority_queue<NodeIndex, std::vector<NodeIndex>, decltype(later_id)> ready(later_id);
    for (NodeIndex i = 0; i < n; ++i)
        if (in_degree[i] == 0) ready.push(i);

    std::vector<NodeIndex> order;
    order.reserve(n);
    while (!ready.empty()) {
        const auto i = ready.top();
        ready.pop();
        order.push_back(i);
        for (const auto j : graph.cited_by(i))
            if (--in_degree[j] == 0) ready.push(j);
    }
    if (order.size() != n) throw InvariantError("citation graph contains a cycle");
    return order;
}

std::vector<std::size_t> path_heights(const CitationGraph& graph) {
    const auto order = topological_order(graph);
    std::vector<std::size_t> height(graph.node_count(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t h = 0;
        for (const auto j : graph.cited_by(*it)) h = std::max(h, height[j] + 1);
        height[*it] = h;
    }
    return height;
}

std::size_t longest_path_length(const CitationGraph& graph) {
    std::size_t best = 0;
    for (const auto h : path_heights(graph)) best = std::max(best, h);
    return best;
}

} // namespace citeflow
