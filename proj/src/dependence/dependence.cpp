#include "citeflow/dependence.hpp"

#include <stdexcept>
#include <string>

#include "citeflow/kernels.hpp"

namespace citeflow {

namespace {

void require_rows(const CitationOperator& op, std::size_t rows) {
    if (rows != op.size()) {
        throw std::invalid_argument("matrix has " + std::to_string(rows) +
                                    " rows, operator has " + std::to_string(op.size()));
    }
}

// Q^T X for a sparse X, accumulated row by row in index order.
DenseMatrix project_sparse(const SparseRowMatrix& q, const SparseRowMatrix& x) {
    DenseMatrix out(q.cols(), x.cols());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        const auto qc = q.row_cols(i);
        const auto qv = q.row_values(i);
        const auto xc = x.row_cols(i);
        const auto xv = x.row_values(i);
        for (std::size_t a = 0; a < qc.size(); ++a)
            for (std::size_t b = 0; b < xc.size(); ++b) out(qc[a], xc[b]) += qv[a] * xv[b];
    }
    return out;
}

DenseMatrix difference(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out = a;
    auto dst = out.values();
    const auto src = b.values();
    for (std::size_t e = 0; e < dst.size(); ++e) dst[e] -= src[e];
    return out;
}

void fill_order_flows(FlowDecomposition& flows) {
    flows.order_flows.clear();
    for (std::size_t i = 1; i < flows.partial_flows.size(); ++i)
        flows.order_flows.push_back(difference(flows.partial_flows[i], flows.partial_flows[i - 1]));
}

} // namespace

DenseMatrix propagate(const CitationOperator& op, const DenseMatrix& in) {
    require_rows(op, in.rows());
    DenseMatrix out;
    kernels::omp::propagate(op, in, out);
    return out;
}

std::size_t iterate_dependence(const CitationOperator& op, const DenseMatrix& seed, OrderLimit limit,
                               const OrderVisitor& visit, bool* complete) {
    require_rows(op, seed.rows());
    const auto max_order = limit.resolve(op.nilpotency_bound());

    DenseMatrix increment = seed;
    DenseMatrix partial = seed;
    DenseMatrix next;
    visit(0, increment, partial);

    std::size_t order = 0;
    bool exhausted = kernels::omp::all_zero(increment);
    while (!exhausted && order < max_order) {
        kernels::omp::propagate(op, increment, next);
        if (kernels::omp::all_zero(next)) {
            exhausted = true;
            break;
        }
        ++order;
        kernels::omp::accumulate(partial, next);
        std::swap(increment, next);
        visit(order, increment, partial);
    }
    if (!exhausted && order == op.nilpotency_bound()) exhausted = true;
    if (complete) *complete = exhausted;
    return order;
}

DependenceStack dependence_stack(const CitationOperator& op, const DenseMatrix& seed,
                                 OrderLimit limit) {
    DependenceStack stack;
    iterate_dependence(
        op, seed, limit,
        [&](std::size_t, const DenseMatrix& increment, const DenseMatrix& partial) {
            stack.increments.push_back(SparseRowMatrix::from_dense(increment));
            stack.partials.push_back(SparseRowMatrix::from_dense(partial));
        },
        &stack.complete);
    return stack;
}

DependenceStack dependence_stack(const CitationOperator& op, const Membership& q, OrderLimit limit) {
    return dependence_stack(op, q.dense(), limit);
}

DenseMatrix total_dependence(const DependenceStack& stack) {
    if (!stack.complete || stack.partials.empty())
        throw std::invalid_argument("total_dependence needs a complete dependence stack");
    return stack.partials.back().to_dense();
}

std::vector<double> dependence_vector(const CitationOperator& op) {
    std::vector<double> r;
    iterate_dependence(op, DenseMatrix(op.size(), 1, 1.0), OrderLimit::automatic(),
                       [&](std::size_t order, const DenseMatrix& increment, const DenseMatrix& partial) {
                           (void)order;
                           (void)increment;
                           r.assign(partial.values().begin(), partial.values().end());
                       });
    return r;
}

DenseMatrix source_dependence(const CitationOperator& op, const Membership& q) {
    require_rows(op, q.weights.rows());
    const auto n = op.size();
    const auto k = q.discipline_count();

    // Incoming edges j <- i with weight 1/d_i, citing nodes in ascending order.
    std::vector<std::size_t> in_ptr(n + 1, 0);
    for (NodeIndex i = 0; i < n; ++i)
        for (const auto j : op.targets(i)) ++in_ptr[j + 1];
    for (std::size_t j = 0; j < n; ++j) in_ptr[j + 1] += in_ptr[j];
    std::vector<NodeIndex> citing(in_ptr.back());
    std::vector<std::size_t> cursor(in_ptr.begin(), in_ptr.end() - 1);
    for (NodeIndex i = 0; i < n; ++i)
        for (const auto j : op.targets(i)) citing[cursor[j]++] = i;

    // Work on S^T (n x k): S^T(i+1) = (DA)^T S^T(i).
    DenseMatrix increment = q.dense();
    DenseMatrix sum = increment;
    DenseMatrix next(n, k);
    for (std::size_t step = 0; step < op.nilpotency_bound(); ++step) {
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            auto dst = next.row(j);
            std::fill(dst.begin(), dst.end(), 0.0);
            for (auto e = in_ptr[j]; e < in_ptr[j + 1]; ++e) {
                const auto i = citing[e];
                const auto scale = op.row_scale(i);
                const auto src = increment.row(i);
                for (std::size_t c = 0; c < k; ++c) dst[c] += scale * src[c];
            }
            for (const auto v : dst) nonzero = nonzero || v != 0.0;
        }
        if (!nonzero) break;
        kernels::serial::accumulate(sum, next);
        std::swap(increment, next);
    }
    return sum.transposed();
}

FlowDecomposition flow_decomposition(const DependenceStack& stack, const Membership& q) {
    FlowDecomposition flows;
    for (const auto& partial : stack.partials)
        flows.partial_flows.push_back(project_sparse(q.weights, partial));
    fill_order_flows(flows);
    return flows;
}

FlowDecomposition compute_flows(const CitationOperator& op, const Membership& q, OrderLimit limit) {
    require_rows(op, q.weights.rows());
    FlowDecomposition flows;
    iterate_dependence(op, q.dense(), limit,
                       [&](std::size_t, const DenseMatrix&, const DenseMatrix& partial) {
                           flows.partial_flows.push_back(kernels::omp::project(q.weights, partial));
                       });
    fill_order_flows(flows);
    return flows;
}

} // namespace citeflow
