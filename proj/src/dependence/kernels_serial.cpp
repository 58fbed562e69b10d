#include <algorithm>
#include <stdexcept>

#include "citeflow/kernels.hpp"

namespace citeflow::kernels::serial {

void propagate(const CitationOperator& op, const DenseMatrix& in, DenseMatrix& out) {
    const auto n = op.size();
    const auto k = in.cols();
    out = DenseMatrix(n, k);
    for (NodeIndex i = 0; i < n; ++i) {
        const auto targets = op.targets(i);
        if (targets.empty()) continue;
        auto dst = out.row(i);
        for (const auto j : targets) {
            const auto src = in.row(j);
            for (std::size_t c = 0; c < k; ++c) dst[c] += src[c];
        }
        const auto scale = op.row_scale(i);
        for (auto& v : dst) v *= scale;
    }
}

void accumulate(DenseMatrix& sum, const DenseMatrix& increment) {
    auto dst = sum.values();
    const auto src = increment.values();
    for (std::size_t e = 0; e < dst.size(); ++e) dst[e] += src[e];
}

DenseMatrix project(const SparseRowMatrix& q, const DenseMatrix& x) {
    DenseMatrix out(q.cols(), x.cols());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        const auto cols = q.row_cols(i);
        const auto vals = q.row_values(i);
        const auto src = x.row(i);
        for (std::size_t e = 0; e < cols.size(); ++e) {
            auto dst = out.row(cols[e]);
            for (std::size_t c = 0; c < src.size(); ++c) dst[c] += vals[e] * src[c];
        }
    }
    return out;
}

bool all_zero(const DenseMatrix& m) {
    const auto v = m.values();
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

} // namespace citeflow::kernels::serial
