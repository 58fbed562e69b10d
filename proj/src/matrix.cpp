#include "citeflow/matrix.hpp"

#include <algorithm>

#include "citeflow/errors.hpp"

namespace citeflow {

SparseRowMatrix::SparseRowMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<std::size_t> row_ptr,
                                 std::vector<std::uint32_t> col_idx, std::vector<double> values)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
    if (row_ptr_.size() != rows_ + 1 || col_idx_.size() != values_.size() ||
        row_ptr_.back() != values_.size())
        throw InvariantError("malformed sparse row matrix");
}

SparseRowMatrix SparseRowMatrix::from_dense(const DenseMatrix& dense) {
    std::vector<std::size_t> row_ptr{0};
    std::vector<std::uint32_t> cols;
    std::vector<double> vals;
    row_ptr.reserve(dense.rows() + 1);
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        const auto row = dense.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0.0) {
                cols.push_back(static_cast<std::uint32_t>(c));
                vals.push_back(row[c]);
            }
        }
        row_ptr.push_back(cols.size());
    }
    return {dense.rows(), dense.cols(), std::move(row_ptr), std::move(cols), std::move(vals)};
}

DenseMatrix SparseRowMatrix::to_dense() const {
    DenseMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto c = row_cols(r);
        const auto v = row_values(r);
        for (std::size_t e = 0; e < c.size(); ++e) out(r, c[e]) = v[e];
    }
    return out;
}

double SparseRowMatrix::at(std::size_t r, std::size_t c) const noexcept {
    const auto cs = row_cols(r);
    const auto it = std::lower_bound(cs.begin(), cs.end(), static_cast<std::uint32_t>(c));
    if (it == cs.end() || *it != c) return 0.0;
    return row_values(r)[static_cast<std::size_t>(it - cs.begin())];
}

} // namespace citeflow
