#include <omp.h>

#include <cstdint>

#include "citeflow/kernels.hpp"

namespace citeflow::kernels {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int threads) {
    if (threads > 0) omp_set_num_threads(threads);
}

namespace omp {

void propagate(const CitationOperator& op, const DenseMatrix& in, DenseMatrix& out) {
    const auto n = static_cast<std::int64_t>(op.size());
    const auto k = in.cols();
    if (out.rows() != op.size() || out.cols() != k) out = DenseMatrix(op.size(), k);

#pragma omp parallel for schedule(dynamic, 512)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<NodeIndex>(ii);
        auto dst = out.row(i);
        std::fill(dst.begin(), dst.end(), 0.0);
        const auto targets = op.targets(i);
        if (targets.empty()) continue;
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
    const auto len = static_cast<std::int64_t>(dst.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < len; ++e) dst[e] += src[e];
}

DenseMatrix project(const SparseRowMatrix& q, const DenseMatrix& x) {
    const auto rows = q.rows();
    const auto blocks = static_cast<std::int64_t>((rows + kReductionBlock - 1) / kReductionBlock);
    std::vector<DenseMatrix> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
        DenseMatrix acc(q.cols(), x.cols());
        const auto begin = static_cast<std::size_t>(b) * kReductionBlock;
        const auto end = std::min(rows, begin + kReductionBlock);
        for (std::size_t i = begin; i < end; ++i) {
            const auto cols = q.row_cols(i);
            const auto vals = q.row_values(i);
            const auto src = x.row(i);
            for (std::size_t e = 0; e < cols.size(); ++e) {
                auto dst = acc.row(cols[e]);
                for (std::size_t c = 0; c < src.size(); ++c) dst[c] += vals[e] * src[c];
            }
        }
        partial[static_cast<std::size_t>(b)] = std::move(acc);
    }

    DenseMatrix out(q.cols(), x.cols());
    for (const auto& p : partial) serial::accumulate(out, p);
    return out;
}

bool all_zero(const DenseMatrix& m) {
    const auto v = m.values();
    const auto len = static_cast<std::int64_t>(v.size());
    bool nonzero = false;
#pragma omp parallel for schedule(static) reduction(|| : nonzero)
    for (std::int64_t e = 0; e < len; ++e) nonzero = nonzero || v[e] != 0.0;
    return !nonzero;
}

} // namespace omp
} // namespace citeflow::kernels
