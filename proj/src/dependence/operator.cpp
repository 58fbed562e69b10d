#include "citeflow/operator.hpp"

namespace citeflow {

CitationOperator::CitationOperator(const CitationGraph& graph)
    : row_ptr_(graph.row_offsets().begin(), graph.row_offsets().end()),
      targets_(graph.cited_indices().begin(), graph.cited_indices().end()),
      inv_degree_(graph.node_count(), 0.0),
      longest_path_(longest_path_length(graph)) {
    for (NodeIndex i = 0; i < graph.node_count(); ++i) {
        const auto d = graph.out_degree(i);
        if (d > 0) inv_degree_[i] = 1.0 / static_cast<double>(d);
    }
}

SparseRowMatrix CitationOperator::to_sparse() const {
    std::vector<std::uint32_t> cols(targets_.begin(), targets_.end());
    std::vector<double> vals(targets_.size());
    for (std::size_t i = 0; i < size(); ++i)
        for (auto e = row_ptr_[i]; e < row_ptr_[i + 1]; ++e) vals[e] = inv_degree_[i];
    return {size(), size(), row_ptr_, std::move(cols), std::move(vals)};
}

} // namespace citeflow
