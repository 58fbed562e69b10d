#include <cmath>
#include <numeric>
#include <random>

#include "citeflow/analytics.hpp"
#include "doctest.h"
#include "support/test_support.hpp"

using namespace citeflow;

namespace {

DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    DenseMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

DenseMatrix fix7_flow() { return from_rows({{4.25, 1.75, 3}, {0, 3, 2}, {0, 0, 2}}); }

DisciplineNetwork network(std::size_t k, std::vector<WeightedEdge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return {k, std::move(edges)};
}

DisciplineNetwork clique_pair(bool bridge) {
    std::vector<WeightedEdge> e;
    for (std::size_t base : {0u, 4u})
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) e.push_back({base + a, base + b, 1.0});
    if (bridge) e.push_back({3, 4, 1.0});
    return network(8, e);
}

DenseMatrix random_flow(std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    DenseMatrix f(k, k);
    for (auto& v : f.values()) v = u(rng) < 2.0 ? 0.0 : u(rng);
    for (std::size_t i = 0; i < k; ++i) f(i, i) += 5.0;
    return f;
}

DenseMatrix permute(const DenseMatrix& f, const std::vector<std::size_t>& perm) {
    DenseMatrix g(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) g(perm[i], perm[j]) = f(i, j);
    return g;
}

} // namespace

TEST_CASE("matrix norms") {
    const auto m1 = from_rows({{1, 1, 1}, {0, 1, 1}, {0, 0, 0}});
    CHECK(matrix_norm(m1, NormKind::EntrywiseL1) == 5.0);
    CHECK(matrix_norm(DenseMatrix(3, 3), NormKind::EntrywiseL1) == 0.0);
    CHECK(matrix_norm(DenseMatrix(3, 3), NormKind::Frobenius) == 0.0);
    CHECK(matrix_norm(from_rows({{3, 4}, {0, 0}}), NormKind::Frobenius) == 5.0);
    CHECK(matrix_norm(from_rows({{-3, 4}}), NormKind::EntrywiseL1) == 7.0);
}

TEST_CASE("order contributions") {
    const auto fx = citeflow::testing::fix7();
    const auto flows = compute_flows(CitationOperator(fx.graph), fx.membership);
    const auto l1 = order_contributions(flows, NormKind::EntrywiseL1);
    REQUIRE(l1.orders.size() == 3);
    const double want[] = {5.0 / 9, 3.0 / 9, 1.0 / 9};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(l1.orders[i].order == i + 1);
        CHECK(std::abs(l1.orders[i].share - want[i]) <= 1e-12);
    }

    const auto ch = citeflow::testing::chain(3);
    const auto cl1 =
        order_contributions(compute_flows(CitationOperator(ch.graph), ch.membership), NormKind::EntrywiseL1);
    REQUIRE(cl1.orders.size() == 2);
    CHECK(std::abs(cl1.orders[0].share - 2.0 / 3) <= 1e-12);
    CHECK(std::abs(cl1.orders[1].share - 1.0 / 3) <= 1e-12);

    const auto edgeless = citeflow::testing::load_text("id,year,month\na,2000,1\n", "citing,cited\n",
                                                       "id,discipline,weight\na,X,1\n");
    const auto ef = compute_flows(CitationOperator(edgeless.graph), edgeless.membership);
    CHECK(order_contributions(ef, NormKind::EntrywiseL1).orders.empty());
    CHECK(order_contributions(ef, NormKind::Frobenius).orders.empty());
}

TEST_CASE("expected and normalized flow") {
    const auto e = expected_flow(from_rows({{4, 0}, {0, 4}}));
    CHECK(e == from_rows({{2, 2}, {2, 2}}));
    const auto uniform = from_rows({{1.5, 1.5, 1.5}, {1.5, 1.5, 1.5}, {1.5, 1.5, 1.5}});
    CHECK(expected_flow(uniform) == uniform);
    CHECK(expected_flow(fix7_flow())(0, 0) == 2.390625);
    CHECK_THROWS_AS(expected_flow(DenseMatrix(2, 2)), std::invalid_argument);

    const auto nu = normalized_flow(uniform);
    for (const auto v : nu.normalized.values()) CHECK(v == 0.0);
    const auto nf = normalized_flow(from_rows({{4, 0}, {0, 4}})).normalized;
    const double r2 = std::sqrt(2.0);
    CHECK(nf(0, 0) == doctest::Approx(r2).epsilon(1e-15));
    CHECK(nf(0, 1) == doctest::Approx(-r2).epsilon(1e-15));
    CHECK(nf(1, 0) == doctest::Approx(-r2).epsilon(1e-15));
    CHECK(nf(1, 1) == doctest::Approx(r2).epsilon(1e-15));
    CHECK(std::abs(normalized_flow(fix7_flow()).normalized(0, 0) - 1.2025724741384844) <= 1e-12);

    // zero row and column: E is zero there and F^ defaults to 0
    const auto z = normalized_flow(from_rows({{1, 0}, {0, 0}}));
    CHECK(z.normalized(1, 1) == 0.0);
    CHECK(z.normalized(0, 1) == 0.0);
}

TEST_CASE("chi-squared margins and residuals on random flows") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t k = 2 + seed % 12;
        const auto f = random_flow(k, seed);
        const auto nf = normalized_flow(f);
        double resid = 0.0, scaled = 0.0, total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double fr = 0, er = 0, fc = 0, ec = 0;
            for (std::size_t j = 0; j < k; ++j) {
                fr += f(i, j);
                er += nf.expected(i, j);
                fc += f(j, i);
                ec += nf.expected(j, i);
                resid += f(i, j) - nf.expected(i, j);
                scaled += nf.normalized(i, j) * std::sqrt(nf.expected(i, j));
                total += f(i, j);
            }
            CHECK(std::abs(fr - er) <= 1e-9 * fr);
            CHECK(std::abs(fc - ec) <= 1e-9 * fc);
        }
        CHECK(std::abs(resid) <= 1e-9 * total);
        CHECK(std::abs(scaled) <= 1e-9 * total);

        // F -> cF scales F^ by sqrt(c)
        DenseMatrix f3 = f;
        for (auto& v : f3.values()) v *= 3.0;
        const auto nf3 = normalized_flow(f3).normalized;
        for (std::size_t e = 0; e < nf3.values().size(); ++e)
            CHECK(nf3.values()[e] ==
                  doctest::Approx(std::sqrt(3.0) * nf.normalized.values()[e]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("percentiles use nearest rank") {
    CHECK(nearest_rank_percentile({15, 20, 35, 40, 50}, 30) == 20);
    CHECK(nearest_rank_percentile({15, 20, 35, 40, 50}, 40) == 20);
    CHECK(nearest_rank_percentile({15, 20, 35, 40, 50}, 100) == 50);
    CHECK(nearest_rank_percentile({3, 1, 2}, 0) == 1);
    CHECK(nearest_rank_percentile({3, 1, 2}, 90) == 3);
    CHECK_THROWS(nearest_rank_percentile({}, 50));
}

TEST_CASE("threshold networks") {
    SUBCASE("all zero residuals tie at every cutoff") {
        const auto nets = threshold_network(DenseMatrix(3, 3), 90, 10);
        CHECK(nets.positive.edges.size() == 3);
        CHECK(nets.negative.edges.size() == 3);
        for (const auto& e : nets.positive.edges) CHECK(e.weight == 0.0);
        for (const auto& e : nets.negative.edges) CHECK(e.weight == 0.0);
    }
    SUBCASE("one strongly positive pair") {
        const auto f = from_rows({{0.3, 2.0, -0.5}, {2.0, 0.1, -0.5}, {-0.5, -0.5, 0.2}});
        const auto nets = threshold_network(f, 90, 10);
        REQUIRE(nets.positive.edges.size() == 1);
        CHECK(nets.positive.edges[0] == WeightedEdge{0, 1, 4.0});
        CHECK(nets.negative.edges.size() == 2);
        CHECK(nets.negative.edges[0].weight == 1.0);
    }
    SUBCASE("lowest-rank cutoff keeps every pair") {
        const auto nets = threshold_network(from_rows({{0, 1, 2}, {3, 0, 4}, {5, 6, 0}}), 1, 0);
        CHECK(nets.positive.edges.size() == 3);
    }
    SUBCASE("degenerate inputs") {
        CHECK(threshold_network(DenseMatrix(1, 1), 90, 10).positive.edges.empty());
        CHECK_THROWS_AS(threshold_network(DenseMatrix(3, 3), 10, 10), std::invalid_argument);
    }
}

TEST_CASE("greedy communities") {
    SUBCASE("two disjoint cliques") {
        const auto res = detect_communities(clique_pair(false));
        CHECK(res.partition == Partition{0, 0, 0, 0, 1, 1, 1, 1});
    }
    SUBCASE("two cliques with a bridge") {
        const auto res = detect_communities(clique_pair(true));
        CHECK(res.partition == Partition{0, 0, 0, 0, 1, 1, 1, 1});
        CHECK(res.modularity == doctest::Approx(modularity(clique_pair(true), res.partition)));
        for (const auto g : res.merge_gains) CHECK(g > 0.0);
    }
    SUBCASE("empty network") {
        CHECK(detect_communities(network(3, {})).partition == Partition{0, 1, 2});
    }
    SUBCASE("single edge merges") {
        CHECK(detect_communities(network(2, {{0, 1, 1.0}})).partition == Partition{0, 0});
    }
    SUBCASE("isolated disciplines stay alone") {
        const auto res = detect_communities(network(4, {{0, 2, 1.0}}));
        CHECK(res.partition == Partition{0, 1, 0, 2});
    }
}

TEST_CASE("modularity of known partitions") {
    const auto net = clique_pair(false);
    // two equal cliques: Q = 2 * (6/12 - (12/24)^2) = 0.5
    CHECK(modularity(net, {0, 0, 0, 0, 1, 1, 1, 1}) == doctest::Approx(0.5));
    CHECK(modularity(net, {0, 0, 0, 0, 0, 0, 0, 0}) == doctest::Approx(0.0));
    CHECK(canonical_partition({7, 7, 3, 9, 3}) == Partition{0, 0, 1, 2, 1});
}

TEST_CASE("betweenness") {
    CHECK(betweenness_centrality(network(3, {{0, 1, 1}, {1, 2, 1}})) == std::vector<double>{0, 1, 0});
    CHECK(betweenness_centrality(network(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}))[0] == 6.0);
    std::vector<WeightedEdge> k4;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) k4.push_back({a, b, 1.0});
    CHECK(betweenness_centrality(network(4, k4)) == std::vector<double>{0, 0, 0, 0});

    // 4-cycle: each node lies on half of the two shortest paths between its neighbours
    const auto cyc = betweenness_centrality(network(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}));
    for (const auto v : cyc) CHECK(v == 0.5);

    const auto tri = network(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 0.1}});
    CHECK(betweenness_centrality(tri, BetweennessMode::Unweighted)[1] == 0.0);
    CHECK(betweenness_centrality(tri, BetweennessMode::Weighted)[1] == 1.0);

    // zero-weight edges carry no topology
    CHECK(betweenness_centrality(network(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 0}}))[1] == 1.0);
}

TEST_CASE("incoming shares and cosine similarity") {
    const auto f = fix7_flow();
    const auto p = incoming_shares(f);
    CHECK(p.shares(0, 0) == 1.0);
    CHECK(p.shares(1, 0) == 0.0);
    CHECK(p.shares(0, 2) == doctest::Approx(3.0 / 7).epsilon(1e-15));
    CHECK(p.shares(1, 2) == doctest::Approx(2.0 / 7).epsilon(1e-15));
    CHECK(p.shares(2, 2) == doctest::Approx(2.0 / 7).epsilon(1e-15));
    CHECK(incoming_shares(DenseMatrix::identity(4)).shares == DenseMatrix::identity(4));

    const auto z = incoming_shares(from_rows({{1, 0}, {1, 0}}));
    CHECK(z.empty_columns == std::vector<bool>{false, true});
    CHECK(z.shares(0, 1) == 0.0);

    const auto s = cosine_similarity(f);
    for (std::size_t i = 0; i < 3; ++i) CHECK(s(i, i) == 1.0);
    CHECK(std::abs(s(0, 1) - 0.5038710255240862) <= 1e-12);
    CHECK(cosine_similarity(DenseMatrix::identity(2))(0, 1) == 0.0);
    const auto zc = cosine_similarity(from_rows({{1, 0}, {1, 0}}));
    CHECK(zc(0, 1) == 0.0);
    CHECK(zc(1, 1) == 1.0);
}

TEST_CASE("rao entropy") {
    for (const auto v : rao_entropy(DenseMatrix::identity(5)).scores) CHECK(v == 0.0);
    const auto same = from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
    for (const auto v : rao_entropy(same).scores) CHECK(std::abs(v) <= 1e-12);

    const auto rao = rao_entropy(fix7_flow());
    CHECK(rao.scores[0] == 0.0);
    CHECK(rao.scores[2] > 0.0);
    // direct evaluation of sum_{u,w} p_u p_w (1 - cos) in numpy-free form
    const auto f = fix7_flow();
    auto col = [&](std::size_t v) { return std::vector<double>{f(0, v), f(1, v), f(2, v)}; };
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    };
    for (std::size_t v = 0; v < 3; ++v) {
        const auto cv = col(v);
        const double total = cv[0] + cv[1] + cv[2];
        double want = 0.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                const auto ca = col(a), cb = col(b);
                const double d = 1.0 - dot(ca, cb) / std::sqrt(dot(ca, ca) * dot(cb, cb));
                want += cv[a] / total * cv[b] / total * d;
            }
        CHECK(std::abs(rao.scores[v] - want) <= 1e-12);
    }
    CHECK(std::abs(rao.scores[1] - 0.230885506127295) <= 1e-12);
    CHECK(std::abs(rao.scores[2] - 0.2232112351780618) <= 1e-12);

    const auto empty = rao_entropy(from_rows({{1, 0}, {1, 0}}));
    CHECK(empty.incoming.empty_columns[1]);
    CHECK(empty.scores[1] == 0.0);
}

TEST_CASE("discipline summary") {
    const auto sum = discipline_summary(fix7_flow(), {3, 2, 2});
    CHECK(sum[0].size == 3);
    CHECK(sum[0].self_flow == 4.25);
    CHECK(sum[0].incoming_flow == 0.0);
    CHECK(sum[0].outgoing_flow == 4.75);
    CHECK(sum[2].size == 2);
    CHECK(sum[2].self_flow == 2.0);
    CHECK(sum[2].incoming_flow == 5.0);
    CHECK(sum[2].outgoing_flow == 0.0);

    const auto single = discipline_summary(from_rows({{7}}), {4});
    CHECK(single[0].incoming_flow == 0.0);
    CHECK(single[0].outgoing_flow == 0.0);
}

TEST_CASE("scale covariance and permutation equivariance") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const std::size_t k = 3 + seed % 10;
        const auto f = random_flow(k, seed);
        const auto base = rao_entropy(f);
        const auto s = cosine_similarity(f);
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < k; ++v) {
                CHECK(s(u, v) == s(v, u));
                CHECK(s(u, v) >= 0.0);
                CHECK(s(u, v) <= 1.0);
            }
        for (const auto v : base.scores) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }

        for (const double c : {3.0, 0.125, 17.5}) {
            DenseMatrix fc = f;
            for (auto& v : fc.values()) v *= c;
            const auto scaled = rao_entropy(fc);
            for (std::size_t v = 0; v < k; ++v) CHECK(std::abs(scaled.scores[v] - base.scores[v]) <= 1e-12);
            const auto nets = threshold_network(normalized_flow(f).normalized, 80, 20);
            const auto nets_c = threshold_network(normalized_flow(fc).normalized, 80, 20);
            CHECK(detect_communities(nets.positive).partition ==
                  detect_communities(nets_c.positive).partition);
            CHECK(betweenness_centrality(nets.positive) == betweenness_centrality(nets_c.positive));
        }

        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
        const auto pf = permute(f, perm);
        const auto prao = rao_entropy(pf);
        const auto ps = cosine_similarity(pf);
        const auto pp = incoming_shares(pf);
        for (std::size_t u = 0; u < k; ++u) {
            CHECK(prao.scores[perm[u]] == base.scores[u]);
            for (std::size_t v = 0; v < k; ++v) {
                CHECK(ps(perm[u], perm[v]) == s(u, v));
                CHECK(pp.shares(perm[u], perm[v]) == base.incoming.shares(u, v));
            }
        }

        // same partition up to relabelling
        const auto nets = threshold_network(normalized_flow(f).normalized, 80, 20);
        const auto pnets = threshold_network(normalized_flow(pf).normalized, 80, 20);
        const auto part = detect_communities(nets.positive).partition;
        const auto ppart = detect_communities(pnets.positive).partition;
        const auto bc = betweenness_centrality(nets.positive);
        const auto pbc = betweenness_centrality(pnets.positive);
        for (std::size_t u = 0; u < k; ++u) {
            CHECK(pbc[perm[u]] == doctest::Approx(bc[u]));
            for (std::size_t v = 0; v < k; ++v)
                CHECK((part[u] == part[v]) == (ppart[perm[u]] == ppart[perm[v]]));
        }
    }
}
