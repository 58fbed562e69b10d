#include <algorithm>
#include <random>

#include "citeflow/analytics.hpp"
#include "citeflow/dependence.hpp"
#include "citeflow/errors.hpp"
#include "citeflow/refkit.hpp"
#include "doctest.h"
#include "support/test_support.hpp"

using namespace citeflow;
using citeflow::testing::idx;
using refkit::ExactRational;

namespace {

DisciplineNetwork make_net(std::size_t k, std::vector<WeightedEdge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return {k, std::move(edges)};
}

} // namespace

TEST_CASE("path enumeration on FIX7") {
    const auto fx = citeflow::testing::fix7();
    const auto& g = fx.graph;
    CHECK(refkit::enumerate_path_dependence(g, idx(g, "1"), idx(g, "6")) == ExactRational(5, 8));
    CHECK(refkit::enumerate_path_dependence(g, idx(g, "6"), idx(g, "1")) == 0);
    for (NodeIndex i = 0; i < g.node_count(); ++i) CHECK(refkit::enumerate_path_dependence(g, i, i) == 1);

    const auto row = refkit::enumerate_path_row(g, idx(g, "1"));
    const ExactRational want[] = {1, {1, 2}, {1, 2}, {1, 4}, {3, 4}, {5, 8}, {3, 8}};
    for (int id = 1; id <= 7; ++id) CHECK(row[idx(g, std::to_string(id))] == want[id - 1]);

    const auto counts = refkit::path_counts(g);
    CHECK(counts[idx(g, "1")] == 11); // paths of length >= 0 starting at node 1
    CHECK(counts[idx(g, "7")] == 1);
}

TEST_CASE("enumeration guard is a hard error") {
    // stacked diamonds double the path count at every layer
    std::string nodes = "id,year,month\n", edges = "citing,cited\n", member = "id,discipline,weight\n";
    const int layers = 24;
    for (int l = 0; l <= layers; ++l) {
        for (const char* side : {"a", "b"}) {
            const std::string id = side + std::to_string(l);
            nodes += id + "," + std::to_string(2100 - l) + ",1\n";
            member += id + ",A,1\n";
            if (l < layers)
                for (const char* next : {"a", "b"}) edges += id + "," + next + std::to_string(l + 1) + "\n";
        }
    }
    const auto big = citeflow::testing::load_text(nodes, edges, member);
    const auto& g = big.graph;
    CHECK_THROWS_AS(refkit::enumerate_path_dependence(g, idx(g, "a0"), idx(g, "a24")), std::length_error);
    CHECK(refkit::enumerate_path_dependence(g, idx(g, "a0"), idx(g, "a24"), 1u << 26) == ExactRational(1, 2));
    CHECK(refkit::exact_path_dependence(g)[idx(g, "a0")][idx(g, "b24")] == ExactRational(1, 2));
}

TEST_CASE("dense dependence") {
    const auto fx = citeflow::testing::fix7();
    const auto p = refkit::dense_dependence(fx.graph);
    const double want[] = {1, .5, .5, .25, .75, .625, .375};
    for (int id = 1; id <= 7; ++id)
        CHECK(std::abs(p(idx(fx.graph, "1"), idx(fx.graph, std::to_string(id))) - want[id - 1]) <= 1e-15);

    const auto edgeless =
        citeflow::testing::load_text("id,year,month\na,2000,1\nb,2000,1\n", "citing,cited\n",
                                     "id,discipline,weight\na,X,1\nb,X,1\n");
    CHECK(refkit::dense_dependence(edgeless.graph) == DenseMatrix::identity(2));

    const auto ch = citeflow::testing::chain(3);
    CHECK(refkit::dense_dependence(ch.graph)(idx(ch.graph, "n0"), idx(ch.graph, "n2")) == 1.0);

    const auto big = citeflow::testing::random_case(1, refkit::kMaxDenseNodes + 1, 10, 1);
    CHECK_THROWS_AS(refkit::dense_dependence(big.graph), std::length_error);
}

TEST_CASE("oracles agree with each other and with the engine") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 20 + seed * 9;
        const auto c = citeflow::testing::random_case(seed, n, n * 4, 1 + seed % 6);
        const auto& g = c.graph;
        const auto dense = refkit::dense_dependence(g);
        const auto exact = refkit::exact_path_dependence(g);
        const auto counts = refkit::path_counts(g, 20000);
        const auto order = topological_order(g);
        std::vector<std::size_t> pos(n);
        for (std::size_t t = 0; t < n; ++t) pos[order[t]] = t;

        for (NodeIndex i = 0; i < n; ++i) {
            if (counts[i] <= 20000) {
                const auto row = refkit::enumerate_path_row(g, i, 20000);
                for (NodeIndex j = 0; j < n; ++j) CHECK(row[j] == exact[i][j]);
            }
            for (NodeIndex j = 0; j < n; ++j) {
                CHECK(std::abs(dense(i, j) - exact[i][j].get_d()) <= 1e-9);
                if (pos[j] < pos[i]) CHECK(dense(i, j) == 0.0);
            }
            CHECK(dense(i, i) == 1.0);
        }

        const auto r = dependence_vector(CitationOperator(g));
        for (NodeIndex i = 0; i < n; ++i) {
            double s = 0.0;
            for (NodeIndex j = 0; j < n; ++j) s += dense(i, j);
            CHECK(std::abs(s - r[i]) <= 1e-9);
        }
    }
}

TEST_CASE("exhaustive modularity") {
    std::vector<WeightedEdge> e;
    for (std::size_t base : {0u, 3u})
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) e.push_back({base + a, base + b, 1.0});
    const auto two = refkit::exhaustive_modularity(make_net(6, e));
    CHECK(two.partition == Partition{0, 0, 0, 1, 1, 1});
    CHECK(two.modularity == doctest::Approx(0.5));

    const auto single = refkit::exhaustive_modularity(make_net(2, {{0, 1, 1.0}}));
    CHECK(single.partition == Partition{0, 0});
    CHECK(single.modularity == doctest::Approx(0.0));

    CHECK(refkit::exhaustive_modularity(make_net(4, {})).partition == Partition{0, 1, 2, 3});
    CHECK_THROWS_AS(refkit::exhaustive_modularity(make_net(11, {})), std::length_error);
}

TEST_CASE("greedy never beats the exhaustive optimum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 2 + trial % 7;
        std::vector<WeightedEdge> e;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (u(rng) < 0.5) e.push_back({a, b, u(rng) * 3.0});
        const auto net = make_net(k, e);
        const auto greedy = detect_communities(net);
        const auto best = refkit::exhaustive_modularity(net);
        CHECK(greedy.modularity <= best.modularity + 1e-12);
        CHECK(best.modularity == doctest::Approx(modularity(net, best.partition)));
    }
}

TEST_CASE("synthetic generator") {
    SUBCASE("single node") {
        const auto s = refkit::random_dag({1, 0, 1, 0});
        CHECK(s.graph.node_count() == 1);
        CHECK(s.graph.edge_count() == 0);
        CHECK(s.membership.discipline_count() == 1);
    }
    SUBCASE("determinism") {
        const auto a = refkit::random_dag_records({300, 2000, 5, 99});
        const auto b = refkit::random_dag_records({300, 2000, 5, 99});
        REQUIRE(a.edges.size() == b.edges.size());
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
            CHECK(a.edges[i].citing == b.edges[i].citing);
            CHECK(a.edges[i].cited == b.edges[i].cited);
        }
        REQUIRE(a.membership.size() == b.membership.size());
        for (std::size_t i = 0; i < a.membership.size(); ++i) {
            CHECK(a.membership[i].discipline == b.membership[i].discipline);
            CHECK(a.membership[i].weight == b.membership[i].weight);
        }
        const auto c = refkit::random_dag_records({300, 2000, 5, 100});
        bool differs = c.edges.size() != a.edges.size();
        for (std::size_t i = 0; !differs && i < a.edges.size(); ++i)
            differs = a.edges[i].citing != c.edges[i].citing || a.edges[i].cited != c.edges[i].cited;
        CHECK(differs);
    }
    SUBCASE("invariants at n=200 m=2000 k=8") {
        const auto s = refkit::random_dag({200, 2000, 8, 42});
        const auto& g = s.graph;
        CHECK(g.node_count() == 200);
        CHECK(g.edge_count() <= 2000);
        CHECK(g.edge_count() > 1500);
        for (NodeIndex i = 0; i < g.node_count(); ++i) {
            const auto cited = g.cited_by(i);
            CHECK(std::is_sorted(cited.begin(), cited.end()));
            CHECK(std::adjacent_find(cited.begin(), cited.end()) == cited.end());
            for (const auto j : cited) CHECK(g.time(j) < g.time(i));
        }
        CHECK(topological_order(g).size() == 200);
        CHECK(s.membership.discipline_count() <= 9);
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            double sum = 0.0;
            for (const auto w : s.membership.weights.row_values(i)) sum += w;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("infeasible target returns fewer edges with a warning") {
        const auto s = refkit::random_dag({10, 45, 1, 3, 2});
        CHECK(s.graph.edge_count() < 45);
        CHECK_FALSE(s.warnings.empty());
    }
    SUBCASE("invalid specs") {
        CHECK_THROWS_AS(refkit::random_dag({0, 0, 1, 0}), InputError);
        CHECK_THROWS_AS(refkit::random_dag({5, 0, 0, 0}), InputError);
        CHECK_THROWS_AS(refkit::random_dag({5, 11, 1, 0}), InputError);
    }
}
