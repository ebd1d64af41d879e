#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "scs/error.hpp"

namespace scs {

constexpr double kInfDist = std::numeric_limits<double>::infinity();

// Simple undirected graph with positive edge weights and a source/sink pair.
struct WeightedGraph {
    struct Edge {
        int u;
        int v;
        double w;
    };

    int vertex_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, double>>> adjacency;

    static WeightedGraph build(int vertex_count, int source, int sink, std::vector<Edge> edges) {
        WeightedGraph g;
        g.vertex_count = vertex_count;
        g.source = source;
        g.sink = sink;
        g.edges = std::move(edges);
        g.validate();
        g.adjacency.assign(vertex_count, {});
        for (const auto& e : g.edges) {
            g.adjacency[e.u].emplace_back(e.v, e.w);
            g.adjacency[e.v].emplace_back(e.u, e.w);
        }
        for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    void validate() const {
        if (vertex_count < 2) throw Error("graph needs at least two vertices");
        if (source == sink) throw Error("source and sink must differ");
        if (source < 0 || source >= vertex_count || sink < 0 || sink >= vertex_count)
            throw Error("source/sink out of range");
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges) {
            if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
                throw Error("edge endpoint out of range");
            if (e.u == e.v) throw Error("self-loops are not allowed");
            if (!(e.w > 0.0)) throw Error("edge weights must be positive");
            auto key = std::minmax(e.u, e.v);
            if (!seen.insert(key).second) throw Error("parallel edges are not allowed");
        }
    }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adjacency[u];
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(v, -kInfDist));
        return it != nbrs.end() && it->first == v;
    }

    double edge_weight(int u, int v) const {
        const auto& nbrs = adjacency[u];
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(v, -kInfDist));
        if (it == nbrs.end() || it->first != v) throw Error("no such edge");
        return it->second;
    }
};

struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int> parent; // -1 at the source and for unreachable vertices
};

// Single-source shortest distances with a binary heap.
inline DijkstraResult dijkstra(const WeightedGraph& g, int source) {
    DijkstraResult r;
    r.dist.assign(g.vertex_count, kInfDist);
    r.parent.assign(g.vertex_count, -1);
    r.dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > r.dist[u]) continue;
        for (const auto& [v, w] : g.adjacency[u]) {
            const double nd = d + w;
            if (nd < r.dist[v]) {
                r.dist[v] = nd;
                r.parent[v] = u;
                heap.emplace(nd, v);
            }
        }
    }
    return r;
}

// All-pairs shortest distances plus a next-hop table for path reconstruction.
class AllPairsTables {
public:
    AllPairsTables(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kInfDist),
                            next_(static_cast<std::size_t>(n) * n, -1) {}

    int vertex_count() const { return n_; }
    double dist(int u, int v) const { return dist_[idx(u, v)]; }
    int next_hop(int u, int v) const { return next_[idx(u, v)]; }

    std::vector<int> reconstruct(int u, int v) const {
        std::vector<int> path{u};
        while (u != v) {
            u = next_hop(u, v);
            if (u < 0) throw Error("no path to reconstruct");
            path.push_back(u);
        }
        return path;
    }

    void set(int u, int v, double d, int hop) {
        dist_[idx(u, v)] = d;
        next_[idx(u, v)] = hop;
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<double> dist_;
    std::vector<int> next_;
};

inline AllPairsTables floyd_warshall(const WeightedGraph& g) {
    const int n = g.vertex_count;
    AllPairsTables t(n);
    for (int v = 0; v < n; ++v) t.set(v, v, 0.0, v);
    for (const auto& e : g.edges) {
        t.set(e.u, e.v, e.w, e.v);
        t.set(e.v, e.u, e.w, e.u);
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double dik = t.dist(i, k);
            if (dik == kInfDist) continue;
            for (int j = 0; j < n; ++j) {
                const double cand = dik + t.dist(k, j);
                if (cand < t.dist(i, j)) {
                    t.set(i, j, cand, t.next_hop(i, k));
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (t.dist(i, j) == kInfDist) {
                throw Error("graph is disconnected: vertices " + std::to_string(i) + " and " +
                            std::to_string(j) + " are unreachable");
            }
        }
    }
    return t;
}

inline bool is_connected(const WeightedGraph& g) {
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : g.adjacency[u]) {
            (void)w;
            if (!seen[v]) {
                seen[v] = 1;
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == g.vertex_count;
}

} // namespace scs
