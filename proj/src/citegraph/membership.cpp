#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "citeflow/citegraph.hpp"
#include "citeflow/errors.hpp"
#include "csv.hpp"

namespace citeflow {

std::vector<double> Membership::sizes() const {
    std::vector<double> out(labels.size(), 0.0);
    for (std::size_t i = 0; i < weights.rows(); ++i) {
        const auto cols = weights.row_cols(i);
        const auto vals = weights.row_values(i);
        for (std::size_t e = 0; e < cols.size(); ++e) out[cols[e]] += vals[e];
    }
    return out;
}

Membership make_membership(const CitationGraph& graph, const std::vector<MembershipEntry>& entries,
                           std::vector<std::string>& warnings) {
    const auto n = graph.node_count();
    Membership m;
    std::unordered_map<std::string, std::uint32_t> label_index;
    std::vector<std::map<std::uint32_t, double>> rows(n);

    for (const auto& e : entries) {
        if (e.node >= n) throw InputError("membership entry for node index out of range");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw InputError("membership weight for " + graph.id(e.node) + " must be positive");
        auto [it, inserted] =
            label_index.emplace(e.discipline, static_cast<std::uint32_t>(m.labels.size()));
        if (inserted) m.labels.push_back(e.discipline);
        rows[e.node][it->second] += e.weight;
    }

    std::size_t unclassified = 0;
    std::uint32_t unclassified_col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].empty()) continue;
        if (unclassified++ == 0) {
            auto [it, inserted] = label_index.emplace(std::string(kUnclassifiedLabel),
                                                      static_cast<std::uint32_t>(m.labels.size()));
            if (inserted) m.labels.emplace_back(kUnclassifiedLabel);
            unclassified_col = it->second;
        }
        rows[i][unclassified_col] = 1.0;
        warnings.push_back("publication " + graph.id(static_cast<NodeIndex>(i)) +
                           " has no discipline, assigned to " + std::string(kUnclassifiedLabel));
    }

    std::vector<std::size_t> row_ptr{0};
    std::vector<std::uint32_t> cols;
    std::vector<double> vals;
    row_ptr.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const auto& [c, w] : rows[i]) sum += w;
        if (std::abs(sum - 1.0) > 1e-9) {
            warnings.push_back("membership weights of " + graph.id(static_cast<NodeIndex>(i)) +
                               " sum to " + std::to_string(sum) + ", normalized to 1");
        }
        for (const auto& [c, w] : rows[i]) {
            cols.push_back(c);
            vals.push_back(w / sum);
        }
        row_ptr.push_back(cols.size());
    }
    m.weights = SparseRowMatrix(n, m.labels.size(), std::move(row_ptr), std::move(cols),
                                std::move(vals));
    return m;
}

Membership parse_membership(std::istream& in, const CitationGraph& graph,
                            std::vector<std::string>& warnings) {
    detail::CsvReader reader(in, "membership", {"id", "discipline", "weight"});
    std::vector<MembershipEntry> entries;
    std::vector<std::string> f;
    while (reader.next(f)) {
        const auto at = " on line " + std::to_string(reader.line());
        const auto node = graph.index_of(f[0]);
        if (!node) throw InputError("membership references unknown node id " + f[0] + at);
        if (f[1].empty()) throw InputError("membership: empty discipline" + at);
        double w = 0.0;
        const auto* end = f[2].data() + f[2].size();
        const auto [ptr, ec] = std::from_chars(f[2].data(), end, w);
        if (f[2].empty() || ec != std::errc() || ptr != end)
            throw InputError("membership: weight '" + f[2] + "' is not a number" + at);
        if (!(w > 0.0) || !std::isfinite(w))
            throw InputError("membership: nonpositive weight " + f[2] + " for " + f[0] + at);
        entries.push_back({*node, std::move(f[1]), w});
    }
    return make_membership(graph, entries, warnings);
}

Membership parse_membership(const std::filesystem::path& path, const CitationGraph& graph,
                            std::vector<std::string>& warnings) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return parse_membership(in, graph, warnings);
}

} // namespace citeflow
