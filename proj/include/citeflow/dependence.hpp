#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "citeflow/citegraph.hpp"
#include "citeflow/matrix.hpp"
#include "citeflow/operator.hpp"

namespace citeflow {

// How many path lengths to include. automatic() runs until the operator is
// exhausted (the longest path of the graph).
class OrderLimit {
public:
    static OrderLimit automatic() { return OrderLimit{}; }
    static OrderLimit at_most(std::size_t order) { return OrderLimit{order}; }

    bool is_automatic() const noexcept { return !value_; }
    std::size_t resolve(std::size_t longest_path) const noexcept {
        return value_ ? *value_ : longest_path;
    }

private:
    OrderLimit() = default;
    explicit OrderLimit(std::size_t v) : value_(v) {}
    std::optional<std::size_t> value_;
};

// Increments T(i) = (DA)^i Q and partial sums R(i) for i = 0..order_count().
struct DependenceStack {
    std::vector<SparseRowMatrix> increments;
    std::vector<SparseRowMatrix> partials;
    // True when the iteration ran until the next increment is exactly zero.
    bool complete = false;

    std::size_t order_count() const noexcept { return increments.empty() ? 0 : increments.size() - 1; }
};

// Partial flows F(i) = Q^T R(i), per-order flows M(i) = F(i) - F(i-1).
struct FlowDecomposition {
    std::vector<DenseMatrix> partial_flows; // F(0) .. F(L)
    std::vector<DenseMatrix> order_flows;   // M(1) .. M(L), stored at index i-1

    std::size_t order_count() const noexcept { return order_flows.size(); }
    const DenseMatrix& total() const { return partial_flows.back(); }
    const DenseMatrix& identity_flow() const { return partial_flows.front(); }
    const DenseMatrix& order_flow(std::size_t order) const { return order_flows.at(order - 1); }
};

// out = DA * in. Throws std::invalid_argument on a row-count mismatch.
DenseMatrix propagate(const CitationOperator& op, const DenseMatrix& in);

// Called once per order with T(order) and R(order), starting at order 0.
using OrderVisitor =
    std::function<void(std::size_t order, const DenseMatrix& increment, const DenseMatrix& partial)>;

// Runs the truncated power series seed, DA seed, (DA)^2 seed, ... without
// keeping history. Stops at the order limit or at the first exactly-zero
// increment. Returns the number of orders visited after order 0, and sets
// *complete (if given) when the series was exhausted.
std::size_t iterate_dependence(const CitationOperator& op, const DenseMatrix& seed, OrderLimit limit,
                               const OrderVisitor& visit, bool* complete = nullptr);

DependenceStack dependence_stack(const CitationOperator& op, const Membership& q,
                                 OrderLimit limit = OrderLimit::automatic());
DependenceStack dependence_stack(const CitationOperator& op, const DenseMatrix& seed,
                                 OrderLimit limit = OrderLimit::automatic());

// R = P Q. Requires a complete stack.
DenseMatrix total_dependence(const DependenceStack& stack);

// r = P e, the dependence of every publication on the whole network.
std::vector<double> dependence_vector(const CitationOperator& op);

// S = Q^T P (k x n), iterated as S = S DA + Q^T.
DenseMatrix source_dependence(const CitationOperator& op, const Membership& q);

FlowDecomposition flow_decomposition(const DependenceStack& stack, const Membership& q);

// Same result as flow_decomposition(dependence_stack(op, q, limit), q) but
// streams the iteration, holding only three n x k buffers.
FlowDecomposition compute_flows(const CitationOperator& op, const Membership& q,
                                OrderLimit limit = OrderLimit::automatic());

} // namespace citeflow
