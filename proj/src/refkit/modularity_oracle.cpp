#include <stdexcept>

#include "citeflow/refkit.hpp"

namespace citeflow::refkit {

namespace {

// Community form: sum over communities of internal/W - (strength/2W)^2.
double community_modularity(const DisciplineNetwork& net, const std::vector<double>& strength,
                            double total_weight, const Partition& part, std::size_t groups) {
    std::vector<double> internal(groups, 0.0), degree(groups, 0.0);
    for (const auto& e : net.edges)
        if (part[e.u] == part[e.v]) internal[part[e.u]] += e.weight;
    for (std::size_t i = 0; i < net.size; ++i) degree[part[i]] += strength[i];
    double q = 0.0;
    for (std::size_t g = 0; g < groups; ++g) {
        const auto frac = degree[g] / (2.0 * total_weight);
        q += internal[g] / total_weight - frac * frac;
    }
    return q;
}

} // namespace

PartitionOptimum exhaustive_modularity(const DisciplineNetwork& net, std::size_t k_max) {
    const auto k = net.size;
    if (k > k_max || k > kMaxPartitionSize)
        throw std::length_error("exhaustive_modularity: too many disciplines");
    PartitionOptimum best;
    best.partition.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) best.partition[i] = i;
    if (k == 0) return best;

    std::vector<double> strength(k, 0.0);
    double total_weight = 0.0;
    for (const auto& e : net.edges) {
        strength[e.u] += e.weight;
        strength[e.v] += e.weight;
        total_weight += e.weight;
    }
    if (total_weight == 0.0) return best; // every partition scores 0; keep singletons

    // Restricted growth strings in lexicographic order.
    Partition rgs(k, 0);
    std::vector<std::size_t> max_prefix(k, 0); // max label among rgs[0..i]
    bool first = true;
    while (true) {
        const auto q = community_modularity(net, strength, total_weight, rgs, max_prefix[k - 1] + 1);
        if (first || q > best.modularity + 1e-12) {
            best.partition = rgs;
            best.modularity = q;
            first = false;
        }
        // advance
        std::size_t i = k;
        while (i-- > 1) {
            if (rgs[i] <= max_prefix[i - 1]) break;
        }
        if (i == 0) break;
        ++rgs[i];
        max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
        for (std::size_t t = i + 1; t < k; ++t) {
            rgs[t] = 0;
            max_prefix[t] = max_prefix[i];
        }
    }
    return best;
}

} // namespace citeflow::refkit
