#include <catch2/catch.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "scs/clustering.hpp"
#include "scs/rng.hpp"

using namespace scs;

namespace {

DissimilarityMatrix four_solution_ladder() {
    // Six non-zero pairwise values 0.1 .. 0.6.
    DissimilarityMatrix m(4);
    m.set(0, 1, 0.1);
    m.set(0, 2, 0.2);
    m.set(0, 3, 0.3);
    m.set(1, 2, 0.4);
    m.set(1, 3, 0.5);
    m.set(2, 3, 0.6);
    return m;
}

SolutionGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SolutionGraph g;
    g.n = n;
    g.adjacency.assign(n, {});
    for (auto [u, v] : edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

DissimilarityMatrix random_matrix(Rng& rng, std::size_t n) {
    DissimilarityMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, 0.01 + 0.99 * rng.real01());
    }
    return m;
}

std::set<std::vector<int>> as_set(const ClusterSet& cs) {
    return {cs.clusters.begin(), cs.clusters.end()};
}

} // namespace

TEST_CASE("adjacency threshold follows the quantile rule", "[clustering]") {
    const auto m = four_solution_ladder();

    SECTION("delta 0.1 keeps only the closest pair") {
        const auto g = build_adjacency(m, 0.1);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(0, 1));
    }
    SECTION("delta 0.5 keeps three pairs") {
        const auto g = build_adjacency(m, 0.5);
        CHECK(g.edge_count() == 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(0, 3));
    }
    SECTION("ties at the threshold are all included") {
        DissimilarityMatrix t(3);
        t.set(0, 1, 0.1);
        t.set(0, 2, 0.1);
        t.set(1, 2, 0.9);
        const auto g = build_adjacency(t, 0.34); // ceil(1.02) = 2nd smallest = 0.1
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 2));
    }
    SECTION("all-identical solutions cannot be thresholded") {
        DissimilarityMatrix z(3);
        CHECK_THROWS_AS(build_adjacency(z, 0.1), Error);
    }
    SECTION("zero-dissimilarity pairs are always connected") {
        DissimilarityMatrix z(3);
        z.set(0, 1, 0.0); // duplicates
        z.set(0, 2, 0.4);
        z.set(1, 2, 0.4);
        const auto g = build_adjacency(z, 0.9);
        CHECK(g.has_edge(0, 1));
    }
}

TEST_CASE("quantile rule against a sort-based oracle", "[clustering]") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + rng.index(8);
        const auto m = random_matrix(rng, n);
        const double delta = 0.05 + 0.9 * rng.real01();

        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m.at(i, j) > 0.0) values.push_back(m.at(i, j));
            }
        }
        std::sort(values.begin(), values.end());
        const std::size_t k = quantile_rank(delta, values.size());
        const double tau = values[k - 1];

        const auto g = build_adjacency(m, delta);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(j)) ==
                      (m.at(i, j) <= tau));
            }
        }
    }
}

TEST_CASE("exact integer quantile products do not round up", "[clustering]") {
    CHECK(quantile_rank(0.1, 30) == 3);  // 0.1 * 30 is 3.0000000000000004 in doubles
    CHECK(quantile_rank(0.1, 10) == 1);
    CHECK(quantile_rank(0.5, 6) == 3);
    CHECK(quantile_rank(0.34, 3) == 2);
    CHECK(quantile_rank(0.99, 1) == 1);
}

TEST_CASE("closed-neighborhood resemblance", "[clustering]") {
    SECTION("adjacent twins") {
        const auto g = graph_from_edges(2, {{0, 1}});
        CHECK(resemblance(g, 0, 1) == 1.0);
    }
    SECTION("isolated vertices") {
        const auto g = graph_from_edges(2, {});
        CHECK(resemblance(g, 0, 1) == 0.0);
    }
    SECTION("two leaves of a star") {
        const auto g = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(resemblance(g, 1, 2) == Approx(1.0 / 3.0));
    }
}

TEST_CASE("data polishing reaches the expected fixpoints", "[clustering]") {
    SECTION("complete graph is already polished") {
        const auto g = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(data_polish(g, 1.0, 99) == g);
    }
    SECTION("star dissolves under a strict threshold") {
        const auto g = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        const auto polished = data_polish(g, 0.6, 99);
        CHECK(polished.edge_count() == 0);
    }
    SECTION("disjoint triangles survive") {
        const auto g = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK(data_polish(g, 0.15, 99) == g);
    }
    SECTION("fixpoints are idempotent") {
        Rng rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = random_matrix(rng, 10);
            const auto adj = build_adjacency(m, 0.3);
            const auto once = data_polish(adj, 0.15, 99);
            CHECK(data_polish(once, 0.15, 99) == once);
        }
    }
}

TEST_CASE("maximal clique enumeration", "[clustering]") {
    SECTION("triangle") {
        const auto g = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        const auto cs = maximal_cliques(g, 3);
        REQUIRE(cs.clusters.size() == 1);
        CHECK(cs.clusters[0] == std::vector<int>{0, 1, 2});
    }
    SECTION("path keeps both overlapping pairs") {
        const auto g = graph_from_edges(3, {{0, 1}, {1, 2}});
        const auto cs = maximal_cliques(g, 2);
        REQUIRE(cs.clusters.size() == 2);
        CHECK(as_set(cs) == std::set<std::vector<int>>{{0, 1}, {1, 2}});
    }
    SECTION("two triangles sharing a vertex overlap") {
        const auto g = graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        const auto cs = maximal_cliques(g, 3);
        REQUIRE(cs.clusters.size() == 2);
        CHECK(as_set(cs) == std::set<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    }
    SECTION("cliques are maximal and mutually incomparable on random graphs") {
        Rng rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = random_matrix(rng, 12);
            const auto g = data_polish(build_adjacency(m, 0.4), 0.15, 99);
            const auto cs = maximal_cliques(g, 1);
            for (const auto& c : cs.clusters) {
                for (std::size_t a = 0; a < c.size(); ++a) {
                    for (std::size_t b = a + 1; b < c.size(); ++b) {
                        CHECK(g.has_edge(c[a], c[b]));
                    }
                }
            }
            for (std::size_t a = 0; a < cs.clusters.size(); ++a) {
                for (std::size_t b = 0; b < cs.clusters.size(); ++b) {
                    if (a == b) continue;
                    CHECK_FALSE(std::includes(cs.clusters[b].begin(), cs.clusters[b].end(),
                                              cs.clusters[a].begin(), cs.clusters[a].end()));
                }
            }
        }
    }
}

TEST_CASE("micro clustering end to end", "[clustering]") {
    SECTION("two tight groups come out as two clusters") {
        DissimilarityMatrix m(12);
        for (int i = 0; i < 12; ++i) {
            for (int j = i + 1; j < 12; ++j) {
                const bool same_group = (i < 6) == (j < 6);
                m.set(i, j, same_group ? 0.05 : 0.9);
            }
        }
        const auto cs = micro_cluster(m, ClusterParams{});
        REQUIRE(cs.clusters.size() == 2);
        CHECK(cs.clusters[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(cs.clusters[1] == std::vector<int>{6, 7, 8, 9, 10, 11});
    }
    SECTION("groups below the minimum size are dropped") {
        DissimilarityMatrix m(4);
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) m.set(i, j, 0.05);
        }
        const auto cs = micro_cluster(m, ClusterParams{});
        CHECK(cs.clusters.empty());
    }
}

TEST_CASE("clustering is invariant under relabeling", "[clustering]") {
    Rng rng(500);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 8 + rng.index(5);
        const auto m = random_matrix(rng, n);

        std::vector<int> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
        rng.shuffle(perm);

        DissimilarityMatrix pm(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                pm.set(perm[i], perm[j], m.at(i, j));
            }
        }

        ClusterParams params;
        params.min_size = 2;
        params.delta = 0.4;
        const auto base = micro_cluster(m, params);
        const auto relabeled = micro_cluster(pm, params);

        std::set<std::vector<int>> expected;
        for (const auto& c : base.clusters) {
            std::vector<int> mapped;
            for (int v : c) mapped.push_back(perm[v]);
            std::sort(mapped.begin(), mapped.end());
            expected.insert(mapped);
        }
        CHECK(as_set(relabeled) == expected);
    }
}
