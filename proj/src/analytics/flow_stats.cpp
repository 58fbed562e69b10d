#include <cmath>
#include <stdexcept>

#include "citeflow/analytics.hpp"

namespace citeflow {

double matrix_norm(const DenseMatrix& m, NormKind kind) {
    double acc = 0.0;
    for (const auto v : m.values()) acc += kind == NormKind::EntrywiseL1 ? std::abs(v) : v * v;
    return kind == NormKind::EntrywiseL1 ? acc : std::sqrt(acc);
}

OrderContributions order_contributions(const FlowDecomposition& flows, NormKind kind) {
    OrderContributions out;
    out.kind = kind;
    double total = 0.0;
    for (std::size_t i = 1; i <= flows.order_count(); ++i) {
        const auto norm = matrix_norm(flows.order_flow(i), kind);
        out.orders.push_back({i, norm, 0.0});
        total += norm;
    }
    if (total == 0.0) {
        out.orders.clear();
        return out;
    }
    for (auto& o : out.orders) o.share = o.norm / total;
    return out;
}

DenseMatrix expected_flow(const DenseMatrix& flow) {
    const auto k = flow.rows();
    if (flow.cols() != k) throw std::invalid_argument("flow matrix must be square");
    std::vector<double> row_sum(k, 0.0), col_sum(k, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            row_sum[i] += flow(i, j);
            col_sum[j] += flow(i, j);
        }
        total += row_sum[i];
    }
    if (!(total > 0.0)) throw std::invalid_argument("flow matrix has zero total");

    DenseMatrix e(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) e(i, j) = row_sum[i] * col_sum[j] / total;
    return e;
}

NormalizedFlow normalized_flow(const DenseMatrix& flow) {
    NormalizedFlow out;
    out.expected = expected_flow(flow);
    const auto k = flow.rows();
    out.normalized = DenseMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto e = out.expected(i, j);
            if (e > 0.0) out.normalized(i, j) = (flow(i, j) - e) / std::sqrt(e);
        }
    }
    return out;
}

std::vector<DisciplineSummary> discipline_summary(const DenseMatrix& flow,
                                                  const std::vector<double>& sizes) {
    const auto k = flow.rows();
    if (flow.cols() != k || sizes.size() != k)
        throw std::invalid_argument("discipline_summary: dimension mismatch");
    std::vector<DisciplineSummary> out(k);
    for (std::size_t v = 0; v < k; ++v) {
        out[v].size = sizes[v];
        out[v].self_flow = flow(v, v);
        for (std::size_t u = 0; u < k; ++u) {
            if (u == v) continue;
            out[v].incoming_flow += flow(u, v);
            out[v].outgoing_flow += flow(v, u);
        }
    }
    return out;
}

} // namespace citeflow
