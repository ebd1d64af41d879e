#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "scs/graph.hpp"
#include "scs/rng.hpp"
#include "scs/sp_sampler.hpp"

namespace scs::testutil {

// Random connected graph: a random spanning tree plus extra edges, integer
// weights so shortest-distance comparisons are exact in doubles.
inline WeightedGraph random_connected_graph(Rng& rng, int n, double extra_edge_share = 0.5,
                                            int max_weight = 50) {
    std::vector<WeightedGraph::Edge> edges;
    std::set<std::pair<int, int>> present;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng.index(v));
        edges.push_back({u, v, static_cast<double>(1 + rng.below(max_weight))});
        present.insert(std::minmax(u, v));
    }
    const int extra = static_cast<int>(extra_edge_share * n);
    for (int i = 0; i < extra; ++i) {
        const int u = static_cast<int>(rng.index(n));
        const int v = static_cast<int>(rng.index(n));
        if (u == v || !present.insert(std::minmax(u, v)).second) continue;
        edges.push_back({u, v, static_cast<double>(1 + rng.below(max_weight))});
    }
    return WeightedGraph::build(n, 0, n - 1, std::move(edges));
}

// Every simple s-t path, sorted by (weight, lexicographic vertex sequence).
inline std::vector<Path> all_simple_paths_sorted(const WeightedGraph& g) {
    std::vector<Path> out;
    std::vector<char> visited(g.vertex_count, 0);
    Path cur{g.source};
    visited[g.source] = 1;
    auto dfs = [&](auto&& self, int u) -> void {
        if (u == g.sink) {
            out.push_back(cur);
            return;
        }
        for (const auto& [v, w] : g.adjacency[u]) {
            (void)w;
            if (visited[v]) continue;
            visited[v] = 1;
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
            visited[v] = 0;
        }
    };
    dfs(dfs, g.source);
    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        const double wa = path_length(a, g);
        const double wb = path_length(b, g);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

} // namespace scs::testutil
