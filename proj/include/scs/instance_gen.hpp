#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "scs/error.hpp"
#include "scs/graph.hpp"
#include "scs/rng.hpp"
#include "scs/spp.hpp"
#include "scs/tsp.hpp"

namespace scs {

// Grid shortest-path instance; vertex (r, c) has id r * cols + c, the source
// sits at the bottom-left corner (0, 0) and the sink at the top-right.
struct SpGridInstance {
    int rows = 0;
    int cols = 0;
    WeightedGraph graph;
};

// Euclidean unit-disk shortest-path instance; the point list is retained for
// rendering.
struct SpEudInstance {
    std::vector<Point> points;
    WeightedGraph graph;
};

// Lattice graph with integer weights uniform in [100000, 1000000].
// Edges are generated row-major, right neighbor before down neighbor.
inline SpGridInstance gen_sp_grid(int rows, int cols, std::uint64_t seed) {
    if (rows < 1 || cols < 1 || rows * cols < 2) throw Error("grid needs at least two vertices");
    Rng rng(seed);
    std::vector<WeightedGraph::Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int id = r * cols + c;
            if (c + 1 < cols) {
                edges.push_back({id, id + 1, static_cast<double>(100000 + rng.below(900001))});
            }
            if (r + 1 < rows) {
                edges.push_back({id, id + cols, static_cast<double>(100000 + rng.below(900001))});
            }
        }
    }
    SpGridInstance inst;
    inst.rows = rows;
    inst.cols = cols;
    inst.graph = WeightedGraph::build(rows * cols, 0, rows * cols - 1, std::move(edges));
    return inst;
}

// Unit-disk graph: n points uniform on [0,1]^2, vertices joined when their
// rounded Euclidean distance is at most 2/sqrt(n), weight = that distance.
// Resamples (with a derived seed) until the graph is connected; the source
// is the point nearest (0,0) and the sink the point nearest (1,1).
inline SpEudInstance gen_sp_eud(int n, std::uint64_t seed) {
    if (n < 2) throw Error("need at least two vertices");
    const double radius = 2.0 / std::sqrt(static_cast<double>(n));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.x = rng.real01();
            p.y = rng.real01();
        }
        std::vector<WeightedGraph::Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double dx = pts[i].x - pts[j].x;
                const double dy = pts[i].y - pts[j].y;
                const double d = round6(std::sqrt(dx * dx + dy * dy));
                if (d > 0.0 && d <= radius) edges.push_back({i, j, d});
            }
        }
        auto corner_nearest = [&](double cx, double cy) {
            int best = 0;
            double best_d = kInfDist;
            for (int i = 0; i < n; ++i) {
                const double dx = pts[i].x - cx;
                const double dy = pts[i].y - cy;
                const double d = dx * dx + dy * dy;
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            return best;
        };
        const int s = corner_nearest(0.0, 0.0);
        const int t = corner_nearest(1.0, 1.0);
        if (s == t) continue;
        WeightedGraph g;
        try {
            g = WeightedGraph::build(n, s, t, std::move(edges));
        } catch (const Error&) {
            continue; // e.g. duplicate rounded distance of zero
        }
        if (!is_connected(g)) continue;
        SpEudInstance inst;
        inst.points = std::move(pts);
        inst.graph = std::move(g);
        return inst;
    }
    throw Error("failed to sample a connected unit-disk graph in 1000 attempts");
}

// n distinct points uniform on [0,1]^2, coordinates rounded to six decimals.
inline TspInstance gen_tsp(int n, std::uint64_t seed) {
    if (n < 4) throw Error("need at least four vertices");
    Rng rng(seed);
    std::vector<Point> pts;
    std::set<std::pair<double, double>> seen;
    pts.reserve(n);
    int guard = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++guard > 100 * n) throw Error("failed to sample distinct points");
        Point p{round6(rng.real01()), round6(rng.real01())};
        if (seen.insert({p.x, p.y}).second) pts.push_back(p);
    }
    return TspInstance::from_points(std::move(pts));
}

// m rectangle sets on an n1 x n2 grid. Each set samples real width and
// height from [1,5] rounded to whole cells, picks uniformly among the
// feasible (orientation, anchor) placements, and costs round(r * cells)
// with r uniform in [1,5]. Duplicate cell sets are resampled.
inline SppInstance gen_spp(int n1, int n2, int m, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1 || m < 1) throw Error("invalid spp parameters");
    Rng rng(seed);
    std::vector<RectSet> sets;
    std::set<std::tuple<int, int, int, int>> seen;
    long attempts = 0;
    const long attempt_cap = 100L * m;
    while (static_cast<int>(sets.size()) < m) {
        if (++attempts > attempt_cap)
            throw Error("failed to place distinct rectangle sets within the attempt budget");
        int w = static_cast<int>(std::llround(rng.real(1.0, 5.0)));
        int h = static_cast<int>(std::llround(rng.real(1.0, 5.0)));
        w = std::min(std::max(w, 1), std::max(n1, n2));
        h = std::min(std::max(h, 1), std::max(n1, n2));

        // Feasible placements across the two orientations.
        long count_a = 0, count_b = 0;
        if (w <= n1 && h <= n2) count_a = static_cast<long>(n1 - w + 1) * (n2 - h + 1);
        const bool square = w == h;
        if (!square && h <= n1 && w <= n2) count_b = static_cast<long>(n1 - h + 1) * (n2 - w + 1);
        const long total = count_a + count_b;
        if (total == 0) continue;

        long pick = static_cast<long>(rng.below(static_cast<std::uint64_t>(total)));
        int d1, d2;
        if (pick < count_a) {
            d1 = w;
            d2 = h;
        } else {
            pick -= count_a;
            d1 = h;
            d2 = w;
        }
        const int span2 = n2 - d2 + 1;
        const int a1 = static_cast<int>(pick / span2) + 1;
        const int a2 = static_cast<int>(pick % span2) + 1;
        const RectSet rect{a1, a1 + d1 - 1, a2, a2 + d2 - 1, 0};
        if (!seen.insert({rect.a1, rect.b1, rect.a2, rect.b2}).second) continue;

        const long cells = static_cast<long>(d1) * d2;
        const long cost = std::llround(rng.real(1.0, 5.0) * static_cast<double>(cells));
        sets.push_back({rect.a1, rect.b1, rect.a2, rect.b2, cost});
    }
    return SppInstance::build(n1, n2, std::move(sets));
}

} // namespace scs
