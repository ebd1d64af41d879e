#include <catch2/catch.hpp>

#include <vector>

#include "scs/graph.hpp"
#include "scs/rng.hpp"

using namespace scs;

namespace {

// Random connected graph: a random spanning tree plus extra random edges,
// integer weights so distance comparisons are exact.
WeightedGraph random_connected_graph(Rng& rng, int n, double extra_edge_share = 0.3) {
    std::vector<WeightedGraph::Edge> edges;
    std::set<std::pair<int, int>> present;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng.index(v));
        edges.push_back({u, v, static_cast<double>(1 + rng.below(50))});
        present.insert(std::minmax(u, v));
    }
    const int extra = static_cast<int>(extra_edge_share * n);
    for (int i = 0; i < extra; ++i) {
        const int u = static_cast<int>(rng.index(n));
        const int v = static_cast<int>(rng.index(n));
        if (u == v) continue;
        if (!present.insert(std::minmax(u, v)).second) continue;
        edges.push_back({u, v, static_cast<double>(1 + rng.below(50))});
    }
    const int s = 0;
    const int t = n - 1;
    return WeightedGraph::build(n, s, t, std::move(edges));
}

} // namespace

TEST_CASE("floyd-warshall on tiny graphs", "[graph]") {
    SECTION("path graph") {
        auto g = WeightedGraph::build(3, 0, 2, {{0, 1, 1.0}, {1, 2, 2.0}});
        const auto t = floyd_warshall(g);
        CHECK(t.dist(0, 2) == 3.0);
        CHECK(t.reconstruct(0, 2) == std::vector<int>{0, 1, 2});
    }
    SECTION("detour beats the direct edge") {
        auto g = WeightedGraph::build(3, 0, 2, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
        const auto t = floyd_warshall(g);
        CHECK(t.dist(0, 2) == 2.0);
        CHECK(t.reconstruct(0, 2) == std::vector<int>{0, 1, 2});
    }
    SECTION("disconnected graph is rejected with the pair named") {
        auto g = WeightedGraph::build(4, 0, 3, {{0, 1, 1.0}, {2, 3, 1.0}});
        CHECK_THROWS_WITH(floyd_warshall(g), Catch::Contains("unreachable"));
    }
}

TEST_CASE("dijkstra basics", "[graph]") {
    auto g = WeightedGraph::build(2, 0, 1, {{0, 1, 4.0}});
    const auto r = dijkstra(g, 0);
    CHECK(r.dist[0] == 0.0);
    CHECK(r.dist[1] == 4.0);
    CHECK(r.parent[1] == 0);
}

TEST_CASE("floyd-warshall equals dijkstra per source", "[graph]") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng.index(7));
        const auto g = random_connected_graph(rng, n);
        const auto t = floyd_warshall(g);
        for (int s = 0; s < n; ++s) {
            const auto d = dijkstra(g, s);
            for (int v = 0; v < n; ++v) {
                CHECK(t.dist(s, v) == d.dist[v]);
            }
        }
        // symmetry, zero diagonal, triangle inequality
        for (int a = 0; a < n; ++a) {
            CHECK(t.dist(a, a) == 0.0);
            for (int b = 0; b < n; ++b) {
                CHECK(t.dist(a, b) == t.dist(b, a));
                for (int c = 0; c < n; ++c) {
                    CHECK(t.dist(a, b) <= t.dist(a, c) + t.dist(c, b) + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("reconstructed paths realize the table distance", "[graph]") {
    Rng rng(6);
    const auto g = random_connected_graph(rng, 10);
    const auto t = floyd_warshall(g);
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = 0; v < g.vertex_count; ++v) {
            const auto path = t.reconstruct(u, v);
            double len = 0.0;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                len += g.edge_weight(path[i], path[i + 1]);
            }
            CHECK(len == t.dist(u, v));
        }
    }
}

TEST_CASE("graph validation rejects malformed inputs", "[graph]") {
    CHECK_THROWS_AS(WeightedGraph::build(2, 0, 0, {{0, 1, 1.0}}), Error);
    CHECK_THROWS_AS(WeightedGraph::build(2, 0, 1, {{0, 0, 1.0}}), Error);
    CHECK_THROWS_AS(WeightedGraph::build(2, 0, 1, {{0, 1, 0.0}}), Error);
    CHECK_THROWS_AS(WeightedGraph::build(2, 0, 1, {{0, 1, 1.0}, {1, 0, 2.0}}), Error);
}
