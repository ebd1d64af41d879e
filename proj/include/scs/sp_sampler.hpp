#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/graph.hpp"
#include "scs/numeric.hpp"
#include "scs/rng.hpp"

namespace scs {

// s-t path as its vertex sequence.
using Path = std::vector<int>;

// Completion of the problem graph: original edges keep their weight, every
// non-edge costs lambda times the shortest distance between its endpoints
// (lambda > 1). Local optima on this graph use only original edges.
struct RelaxedGraph {
    int vertex_count = 0;
    double lambda = 0.0;
    std::vector<double> weights;  // dense vertex_count x vertex_count
    std::vector<std::uint8_t> original; // 1 where the edge exists in the input graph

    double weight(int u, int v) const {
        return weights[static_cast<std::size_t>(u) * vertex_count + v];
    }
    bool is_original(int u, int v) const {
        return original[static_cast<std::size_t>(u) * vertex_count + v] != 0;
    }
};

inline RelaxedGraph build_relaxed(const WeightedGraph& g, const AllPairsTables& t, double lambda) {
    if (!(lambda > 1.0)) throw Error("lambda must exceed 1");
    RelaxedGraph r;
    r.vertex_count = g.vertex_count;
    r.lambda = lambda;
    const std::size_t n = static_cast<std::size_t>(g.vertex_count);
    r.weights.assign(n * n, 0.0);
    r.original.assign(n * n, 0);
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = 0; v < g.vertex_count; ++v) {
            if (u != v) r.weights[u * n + v] = lambda * t.dist(u, v);
        }
    }
    for (const auto& e : g.edges) {
        r.weights[e.u * n + e.v] = e.w;
        r.weights[e.v * n + e.u] = e.w;
        r.original[e.u * n + e.v] = 1;
        r.original[e.v * n + e.u] = 1;
    }
    return r;
}

// Everything the sampler needs, built once per instance and shareable.
struct SpContext {
    WeightedGraph graph;
    AllPairsTables tables;
    RelaxedGraph relaxed;
};

inline SpContext build_sp_context(WeightedGraph g, double lambda) {
    AllPairsTables t = floyd_warshall(g);
    RelaxedGraph r = build_relaxed(g, t, lambda);
    return SpContext{std::move(g), std::move(t), std::move(r)};
}

template <class WeightFn>
    requires std::invocable<WeightFn, int, int>
inline double path_length(const Path& p, WeightFn&& weight_of) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) total += weight_of(p[i], p[i + 1]);
    return total;
}

inline double path_length(const Path& p, const RelaxedGraph& rg) {
    return path_length(p, [&](int u, int v) { return rg.weight(u, v); });
}

inline double path_length(const Path& p, const WeightedGraph& g) {
    return path_length(p, [&](int u, int v) { return g.edge_weight(u, v); });
}

inline bool is_simple_path(const Path& p) {
    std::vector<int> seen(p.begin(), p.end());
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// True iff every consecutive pair of p is an edge of the input graph.
inline bool uses_only_graph_edges(const Path& p, const WeightedGraph& g) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    return true;
}

// Random initial s-t path: from each vertex, step uniformly to an adjacent
// vertex strictly closer to the sink in shortest distance. In a connected
// positive-weight graph such a neighbor always exists (the next hop of a
// shortest path qualifies), so this terminates within |V|-1 steps and the
// strictly decreasing distance keeps the path simple.
inline Path sp_initial(const WeightedGraph& g, const AllPairsTables& t, Rng& rng) {
    Path p{g.source};
    int cur = g.source;
    while (cur != g.sink) {
        const double here = t.dist(cur, g.sink);
        std::vector<int> closer;
        for (const auto& [v, w] : g.adjacency[cur]) {
            (void)w;
            if (t.dist(v, g.sink) < here) closer.push_back(v);
        }
        if (closer.empty()) throw Error("no descent neighbor; graph inconsistent");
        cur = closer[rng.index(closer.size())];
        p.push_back(cur);
    }
    return p;
}

// Excises cycles from an s-t walk: repeatedly find the first position whose
// vertex appeared before and cut the segment between the two occurrences.
// On positive weights this never increases the walk's length.
inline Path remove_cycles(Path walk) {
    for (;;) {
        bool cut = false;
        for (std::size_t j = 1; j < walk.size() && !cut; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (walk[i] == walk[j]) {
                    walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                               walk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    cut = true;
                    break;
                }
            }
        }
        if (!cut) return walk;
    }
}

// The three move families over a fixed path: delete one interior vertex,
// replace one interior vertex, insert one vertex between two positions.
// Moves are indexed densely so a seeded scan can visit them in random order
// without materializing the neighbor walks.
class SpNeighborhood {
public:
    struct Move {
        enum Kind { Remove, Replace, Insert } kind;
        int slot;   // Remove/Replace: interior position; Insert: gap before this position
        int vertex; // Replace/Insert: the vertex brought in
    };

    SpNeighborhood(const Path& p, const RelaxedGraph& rg) : path_(&p), rg_(&rg) {
        const std::size_t len = p.size();
        interior_ = len >= 2 ? len - 2 : 0;
        gaps_ = len >= 2 ? len - 1 : 0;
        n_ = static_cast<std::size_t>(rg.vertex_count);
        size_ = interior_ // removals
                + interior_ * n_ // replacements
                + gaps_ * n_; // insertions
    }

    std::size_t size() const { return size_; }

    // Decodes a move index; returns false for the excluded degenerate slots
    // (replacing a vertex with itself or an adjacent one, inserting a copy of
    // a gap endpoint).
    bool decode(std::size_t idx, Move& mv) const {
        const Path& p = *path_;
        if (idx < interior_) {
            mv = Move{Move::Remove, static_cast<int>(idx + 1), -1};
            return true;
        }
        idx -= interior_;
        if (idx < interior_ * n_) {
            const int slot = static_cast<int>(idx / n_) + 1;
            const int u = static_cast<int>(idx % n_);
            if (u == p[slot - 1] || u == p[slot] || u == p[slot + 1]) return false;
            mv = Move{Move::Replace, slot, u};
            return true;
        }
        idx -= interior_ * n_;
        const int slot = static_cast<int>(idx / n_) + 1; // insert between slot-1 and slot
        const int u = static_cast<int>(idx % n_);
        if (u == p[slot - 1] || u == p[slot]) return false;
        mv = Move{Move::Insert, slot, u};
        return true;
    }

    // Weight saved by the move on the relaxed graph (positive = improvement).
    double gain(const Move& mv) const {
        const Path& p = *path_;
        const RelaxedGraph& rg = *rg_;
        switch (mv.kind) {
        case Move::Remove:
            return rg.weight(p[mv.slot - 1], p[mv.slot]) + rg.weight(p[mv.slot], p[mv.slot + 1]) -
                   rg.weight(p[mv.slot - 1], p[mv.slot + 1]);
        case Move::Replace:
            return rg.weight(p[mv.slot - 1], p[mv.slot]) + rg.weight(p[mv.slot], p[mv.slot + 1]) -
                   rg.weight(p[mv.slot - 1], mv.vertex) - rg.weight(mv.vertex, p[mv.slot + 1]);
        case Move::Insert:
            return rg.weight(p[mv.slot - 1], p[mv.slot]) - rg.weight(p[mv.slot - 1], mv.vertex) -
                   rg.weight(mv.vertex, p[mv.slot]);
        }
        return 0.0;
    }

    // The raw neighbor walk; may repeat vertices.
    Path apply(const Move& mv) const {
        Path q = *path_;
        switch (mv.kind) {
        case Move::Remove:
            q.erase(q.begin() + mv.slot);
            break;
        case Move::Replace:
            q[mv.slot] = mv.vertex;
            break;
        case Move::Insert:
            q.insert(q.begin() + mv.slot, mv.vertex);
            break;
        }
        return q;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < size_; ++i) {
            Move mv;
            if (decode(i, mv)) fn(mv);
        }
    }

private:
    const Path* path_;
    const RelaxedGraph* rg_;
    std::size_t interior_ = 0;
    std::size_t gaps_ = 0;
    std::size_t n_ = 0;
    std::size_t size_ = 0;
};

// True iff some move strictly improves the path on the relaxed graph.
inline bool has_improving_sp_move(const Path& p, const RelaxedGraph& rg) {
    const SpNeighborhood nbh(p, rg);
    const double eps = improvement_epsilon(path_length(p, rg));
    for (std::size_t i = 0; i < nbh.size(); ++i) {
        SpNeighborhood::Move mv;
        if (nbh.decode(i, mv) && nbh.gain(mv) > eps) return true;
    }
    return false;
}

// First-improvement descent on the relaxed graph with cycle removal.
// The output is a simple s-t path that is locally optimal on the relaxed
// graph and, by the relaxation's construction, uses only original edges.
// When a trace is supplied it records the path weight after the initial
// solution and after every accepted move.
inline Path sp_local_search(const SpContext& ctx, Rng& rng, std::vector<double>* trace = nullptr) {
    Path p = sp_initial(ctx.graph, ctx.tables, rng);
    if (trace) trace->push_back(path_length(p, ctx.relaxed));
    for (;;) {
        const SpNeighborhood nbh(p, ctx.relaxed);
        const double eps = improvement_epsilon(path_length(p, ctx.relaxed));
        ShuffledScan scan(nbh.size(), rng);
        std::size_t idx;
        bool moved = false;
        while (scan.next(idx)) {
            SpNeighborhood::Move mv;
            if (!nbh.decode(idx, mv)) continue;
            if (nbh.gain(mv) <= eps) continue;
            Path q = nbh.apply(mv);
            if (!is_simple_path(q)) q = remove_cycles(std::move(q));
            p = std::move(q);
            moved = true;
            if (trace) trace->push_back(path_length(p, ctx.relaxed));
            break;
        }
        if (!moved) return p;
    }
}

// Edge-set view of a path for dissimilarity computations.
inline ElementSet path_edge_set(const Path& p) {
    std::vector<std::uint64_t> ids;
    ids.reserve(p.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        ids.push_back(edge_element(static_cast<std::uint32_t>(p[i]),
                                   static_cast<std::uint32_t>(p[i + 1])));
    }
    return ElementSet(std::move(ids));
}

} // namespace scs
