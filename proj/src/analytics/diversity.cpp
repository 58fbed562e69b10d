#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "citeflow/analytics.hpp"

namespace citeflow {

namespace {

// Sums over sorted terms, so the result depends only on the multiset of
// terms and not on discipline order.
double ordered_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (const auto t : terms) acc += t;
    return acc;
}

void require_square(const DenseMatrix& flow) {
    if (flow.rows() != flow.cols()) throw std::invalid_argument("flow matrix must be square");
}

} // namespace

IncomingShares incoming_shares(const DenseMatrix& flow) {
    require_square(flow);
    const auto k = flow.rows();
    IncomingShares out{DenseMatrix(k, k), std::vector<bool>(k, false)};
    std::vector<double> terms(k);
    for (std::size_t v = 0; v < k; ++v) {
        for (std::size_t u = 0; u < k; ++u) terms[u] = flow(u, v);
        const auto col = ordered_sum(terms);
        if (!(col > 0.0)) {
            out.empty_columns[v] = true;
            continue;
        }
        for (std::size_t u = 0; u < k; ++u) out.shares(u, v) = flow(u, v) / col;
    }
    return out;
}

DenseMatrix cosine_similarity(const DenseMatrix& flow) {
    require_square(flow);
    const auto k = flow.rows();
    std::vector<double> norm(k), terms(k);
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t i = 0; i < k; ++i) terms[i] = flow(i, u) * flow(i, u);
        norm[u] = std::sqrt(ordered_sum(terms));
    }
    DenseMatrix s(k, k);
    for (std::size_t u = 0; u < k; ++u) {
        s(u, u) = 1.0;
        for (std::size_t v = u + 1; v < k; ++v) {
            if (norm[u] == 0.0 || norm[v] == 0.0) continue;
            for (std::size_t i = 0; i < k; ++i) terms[i] = flow(i, u) * flow(i, v);
            const auto c = std::clamp(ordered_sum(terms) / (norm[u] * norm[v]), 0.0, 1.0);
            s(u, v) = c;
            s(v, u) = c;
        }
    }
    return s;
}

RaoScores rao_entropy(const DenseMatrix& flow) {
    require_square(flow);
    const auto k = flow.rows();
    RaoScores out;
    out.incoming = incoming_shares(flow);
    const auto sim = cosine_similarity(flow);
    out.distance = DenseMatrix(k, k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t w = 0; w < k; ++w) out.distance(u, w) = 1.0 - sim(u, w);

    out.scores.assign(k, 0.0);
    std::vector<double> terms;
    terms.reserve(k * k);
    for (std::size_t v = 0; v < k; ++v) {
        if (out.incoming.empty_columns[v]) continue;
        terms.clear();
        for (std::size_t u = 0; u < k; ++u) {
            const auto pu = out.incoming.shares(u, v);
            if (pu == 0.0) continue;
            for (std::size_t w = 0; w < k; ++w)
                terms.push_back(pu * out.incoming.shares(w, v) * out.distance(u, w));
        }
        out.scores[v] = ordered_sum(terms);
    }
    return out;
}

} // namespace citeflow
