#include <limits>
#include <stdexcept>

#include "citeflow/analytics.hpp"

namespace citeflow {

Partition canonical_partition(const Partition& labels) {
    Partition out(labels.size());
    std::vector<std::pair<std::size_t, std::size_t>> seen; // label -> new id
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::size_t id = seen.size();
        for (const auto& [label, assigned] : seen) {
            if (label == labels[i]) {
                id = assigned;
                break;
            }
        }
        if (id == seen.size()) seen.emplace_back(labels[i], id);
        out[i] = id;
    }
    return out;
}

double modularity(const DisciplineNetwork& net, const Partition& partition) {
    if (partition.size() != net.size) throw std::invalid_argument("partition size mismatch");
    const auto a = net.adjacency();
    const auto k = net.size;
    std::vector<double> strength(k, 0.0);
    double two_w = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) strength[i] += a(i, j);
        two_w += strength[i];
    }
    if (two_w == 0.0) return 0.0;
    double q = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (partition[i] == partition[j]) q += a(i, j) - strength[i] * strength[j] / two_w;
    return q / two_w;
}

CommunityResult detect_communities(const DisciplineNetwork& net) {
    const auto k = net.size;
    CommunityResult result;
    const auto a = net.adjacency();

    // Communities are keyed by their smallest member. between(x, y) is the
    // total adjacency weight between communities x and y (both directions
    // for x == y); total(x) is the summed strength of x's members.
    DenseMatrix between = a;
    std::vector<double> total(k, 0.0);
    double two_w = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) total[i] += a(i, j);
        two_w += total[i];
    }
    std::vector<std::size_t> owner(k);
    std::vector<bool> active(k, true);
    for (std::size_t i = 0; i < k; ++i) owner[i] = i;

    if (two_w > 0.0) {
        while (true) {
            double best = 0.0;
            std::size_t bx = k, by = k;
            for (std::size_t x = 0; x < k; ++x) {
                if (!active[x]) continue;
                for (std::size_t y = x + 1; y < k; ++y) {
                    if (!active[y] || between(x, y) == 0.0) continue;
                    const double gain =
                        2.0 * (between(x, y) / two_w - (total[x] / two_w) * (total[y] / two_w));
                    if (gain > best) {
                        best = gain;
                        bx = x;
                        by = y;
                    }
                }
            }
            if (bx == k) break;

            for (std::size_t z = 0; z < k; ++z) {
                if (!active[z] || z == bx || z == by) continue;
                between(bx, z) += between(by, z);
                between(z, bx) = between(bx, z);
            }
            between(bx, bx) += between(by, by) + 2.0 * between(bx, by);
            total[bx] += total[by];
            active[by] = false;
            for (auto& o : owner)
                if (o == by) o = bx;
            result.merge_gains.push_back(best);
        }
    }

    result.partition = canonical_partition(owner);
    result.modularity = modularity(net, result.partition);
    return result;
}

} // namespace citeflow
