#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "citeflow/citegraph.hpp"
#include "citeflow/matrix.hpp"

namespace citeflow {

// The row-normalized citation operator DA. Row i holds 1/d_i at each cited
// node; sink rows are empty. Every entry in a row shares the same value, so
// only the reciprocal out-degree per row is stored.
class CitationOperator {
public:
    explicit CitationOperator(const CitationGraph& graph);

    std::size_t size() const noexcept { return inv_degree_.size(); }
    std::span<const NodeIndex> targets(NodeIndex i) const noexcept {
        return {targets_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
    }
    double row_scale(NodeIndex i) const noexcept { return inv_degree_[i]; }

    // Longest path of the underlying graph; (DA)^(l+1) = 0.
    std::size_t nilpotency_bound() const noexcept { return longest_path_; }

    SparseRowMatrix to_sparse() const;

private:
    std::vector<std::size_t> row_ptr_;
    std::vector<NodeIndex> targets_;
    std::vector<double> inv_degree_;
    std::size_t longest_path_ = 0;
};

inline CitationOperator build_operator(const CitationGraph& graph) { return CitationOperator(graph); }

} // namespace citeflow
