#include <algorithm>
#include <stdexcept>

#include "citeflow/refkit.hpp"

namespace citeflow::refkit {

namespace {

class PathWalker {
public:
    PathWalker(const CitationGraph& graph, std::size_t max_paths)
        : graph_(graph), max_paths_(max_paths) {}

    // Visits every path from v; calls on_end(node, likelihood) for each path end.
    template <class OnEnd, class Keep>
    void walk(NodeIndex v, const ExactRational& likelihood, OnEnd&& on_end, Keep&& keep) {
        if (++walked_ > max_paths_)
            throw std::length_error("path enumeration exceeded " + std::to_string(max_paths_) +
                                    " paths");
        on_end(v, likelihood);
        const auto d = graph_.out_degree(v);
        if (d == 0) return;
        const ExactRational next = likelihood / ExactRational(static_cast<long>(d));
        for (const auto c : graph_.cited_by(v))
            if (keep(c)) walk(c, next, on_end, keep);
    }

private:
    const CitationGraph& graph_;
    std::size_t max_paths_;
    std::size_t walked_ = 0;
};

} // namespace

std::vector<ExactRational> enumerate_path_row(const CitationGraph& graph, NodeIndex i,
                                              std::size_t max_paths) {
    std::vector<ExactRational> row(graph.node_count(), 0);
    PathWalker walker(graph, max_paths);
    walker.walk(
        i, ExactRational(1), [&](NodeIndex v, const ExactRational& p) { row[v] += p; },
        [](NodeIndex) { return true; });
    return row;
}

ExactRational enumerate_path_dependence(const CitationGraph& graph, NodeIndex i, NodeIndex j,
                                        std::size_t max_paths) {
    const auto n = graph.node_count();
    if (i >= n || j >= n) throw std::out_of_range("node index out of range");
    if (i == j) return 1;

    // Only walk through nodes that can still reach j.
    std::vector<bool> reaches(n, false);
    reaches[j] = true;
    const auto order = topological_order(graph);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (const auto c : graph.cited_by(*it))
            if (reaches[c]) reaches[*it] = true;
    if (!reaches[i]) return 0;

    ExactRational total = 0;
    PathWalker walker(graph, max_paths);
    walker.walk(
        i, ExactRational(1),
        [&](NodeIndex v, const ExactRational& p) {
            if (v == j) total += p;
        },
        [&](NodeIndex c) { return reaches[c]; });
    return total;
}

std::vector<std::size_t> path_counts(const CitationGraph& graph, std::size_t max_paths) {
    const auto order = topological_order(graph);
    std::vector<std::size_t> count(graph.node_count(), 1);
    const auto cap = max_paths + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t c = 1;
        for (const auto j : graph.cited_by(*it)) c = std::min(cap, c + count[j]);
        count[*it] = c;
    }
    return count;
}

std::vector<std::vector<ExactRational>> exact_path_dependence(const CitationGraph& graph) {
    const auto n = graph.node_count();
    std::vector<std::vector<ExactRational>> p(n);
    const auto order = topological_order(graph);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto i = *it;
        auto& row = p[i];
        row.assign(n, 0);
        const auto d = graph.out_degree(i);
        if (d > 0) {
            for (const auto c : graph.cited_by(i))
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(p[c][j]) != 0) row[j] += p[c][j];
            const ExactRational scale(1, static_cast<unsigned long>(d));
            for (auto& v : row)
                if (sgn(v) != 0) v *= scale;
        }
        row[i] = 1;
    }
    return p;
}

DenseMatrix dense_dependence(const CitationGraph& graph) {
    const auto n = graph.node_count();
    if (n > kMaxDenseNodes)
        throw std::length_error("dense_dependence is limited to " + std::to_string(kMaxDenseNodes) +
                                " nodes");
    const auto order = topological_order(graph);
    std::vector<std::size_t> pos(n);
    for (std::size_t r = 0; r < n; ++r) pos[order[r]] = r;

    // U = I - DA in topological coordinates; strictly upper off the diagonal.
    DenseMatrix u = DenseMatrix::identity(n);
    for (NodeIndex i = 0; i < n; ++i) {
        const auto d = graph.out_degree(i);
        for (const auto j : graph.cited_by(i)) u(pos[i], pos[j]) = -1.0 / static_cast<double>(d);
    }

    // Back-substitution for U X = I, last row first; U has a unit diagonal.
    DenseMatrix x(n, n);
    for (std::size_t r = n; r-- > 0;) {
        auto xr = x.row(r);
        xr[r] = 1.0;
        for (std::size_t c = r + 1; c < n; ++c) {
            const auto coeff = u(r, c);
            if (coeff == 0.0) continue;
            const auto xc = x.row(c);
            for (std::size_t t = c; t < n; ++t) xr[t] -= coeff * xc[t];
        }
    }

    DenseMatrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) p(order[r], order[c]) = x(r, c);
    return p;
}

} // namespace citeflow::refkit
