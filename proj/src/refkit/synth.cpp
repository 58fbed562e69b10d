#include <random>
#include <unordered_set>

#include "citeflow/errors.hpp"
#include "citeflow/refkit.hpp"

namespace citeflow::refkit {

namespace {

// mt19937_64 output is fully specified by the standard; the mappings below
// are fixed too, so a seed gives the same files on every platform.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
    }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

PubTime bucket_time(std::size_t bucket) {
    return PubTime{2000 + static_cast<int>(bucket / 12), static_cast<int>(bucket % 12) + 1};
}

} // namespace

SynthRecords random_dag_records(const SynthSpec& spec) {
    if (spec.n < 1) throw InputError("synth: n must be at least 1");
    if (spec.k < 1) throw InputError("synth: k must be at least 1");
    if (spec.month_span < 1) throw InputError("synth: month span must be at least 1");
    if (spec.n > 0xFFFFFFFFull) throw InputError("synth: n too large");
    const auto max_edges = static_cast<unsigned __int128>(spec.n) * (spec.n - 1) / 2;
    if (spec.target_m > max_edges) throw InputError("synth: m exceeds n(n-1)/2");

    SeededStream rng(spec.seed);
    SynthRecords out;

    std::vector<std::size_t> bucket(spec.n);
    out.nodes.nodes.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        bucket[i] = rng.below(spec.month_span);
        out.nodes.nodes.push_back({"p" + std::to_string(i), bucket_time(bucket[i])});
    }

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(spec.target_m * 2);
    out.edges.reserve(spec.target_m);
    const std::size_t budget = 20 * spec.target_m + 100;
    for (std::size_t attempt = 0; attempt < budget && out.edges.size() < spec.target_m; ++attempt) {
        auto a = rng.below(spec.n);
        auto b = rng.below(spec.n);
        if (bucket[a] == bucket[b]) continue;
        if (bucket[a] < bucket[b]) std::swap(a, b); // a is newer and cites b
        if (!seen.insert((a << 32) | b).second) continue;
        out.edges.push_back({out.nodes.nodes[a].id, out.nodes.nodes[b].id, 0});
    }
    if (out.edges.size() < spec.target_m) {
        out.warnings.push_back("synth: produced " + std::to_string(out.edges.size()) + " of " +
                               std::to_string(spec.target_m) + " requested edges");
    }

    out.membership.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const auto& id = out.nodes.nodes[i].id;
        const auto first = rng.below(spec.k);
        if (spec.k >= 2 && rng.unit() < 0.2) {
            const auto second = (first + 1 + rng.below(spec.k - 1)) % spec.k;
            const double w = 0.25 + 0.5 * rng.unit();
            out.membership.push_back({id, "D" + std::to_string(first), w});
            out.membership.push_back({id, "D" + std::to_string(second), 1.0 - w});
        } else {
            out.membership.push_back({id, "D" + std::to_string(first), 1.0});
        }
    }
    return out;
}

SynthGraph random_dag(const SynthSpec& spec) {
    auto records = random_dag_records(spec);
    auto [graph, report] = build_graph(records.nodes, records.edges);
    std::vector<MembershipEntry> entries;
    entries.reserve(records.membership.size());
    for (const auto& row : records.membership)
        entries.push_back({*graph.index_of(row.id), row.discipline, row.weight});
    std::vector<std::string> warnings = std::move(records.warnings);
    auto membership = make_membership(graph, entries, warnings);
    return {std::move(graph), std::move(membership), std::move(report), std::move(warnings)};
}

} // namespace citeflow::refkit
