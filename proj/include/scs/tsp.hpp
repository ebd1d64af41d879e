#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/numeric.hpp"
#include "scs/rng.hpp"

namespace scs {

inline double round6(double x) {
    return static_cast<double>(std::llround(x * 1e6)) / 1e6;
}

struct Point {
    double x;
    double y;
};

// Euclidean TSP instance on [0,1]^2. Coordinates and pairwise distances are
// rounded to six decimals at construction; every later comparison uses the
// rounded values, so local optimality is defined on them.
class TspInstance {
public:
    static TspInstance from_points(std::vector<Point> pts) {
        TspInstance inst;
        for (auto& p : pts) {
            p.x = round6(p.x);
            p.y = round6(p.y);
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
                    throw Error("duplicate vertex positions");
            }
        }
        inst.points_ = std::move(pts);
        const std::size_t n = inst.points_.size();
        inst.dist_.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = inst.points_[i].x - inst.points_[j].x;
                const double dy = inst.points_[i].y - inst.points_[j].y;
                const double d = round6(std::sqrt(dx * dx + dy * dy));
                inst.dist_[i * n + j] = d;
                inst.dist_[j * n + i] = d;
            }
        }
        return inst;
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    double dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * size() + j]; }

private:
    std::vector<Point> points_;
    std::vector<double> dist_;
};

// Hamiltonian cycle as a permutation of vertex ids; position n wraps to 0.
using Tour = std::vector<int>;

inline double tour_length(const Tour& t, const TspInstance& inst) {
    double total = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        total += inst.dist(t[i], t[(i + 1) % t.size()]);
    }
    return total;
}

inline bool is_valid_tour(const Tour& t, const TspInstance& inst) {
    if (t.size() != inst.size() || t.size() < 3) return false;
    std::vector<char> seen(t.size(), 0);
    for (int v : t) {
        if (v < 0 || static_cast<std::size_t>(v) >= t.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// 2-opt move: reverse the tour segment [i, j]. The pair (0, n-1) reverses
// the whole cycle and is excluded as a no-op.
namespace detail {

struct TwoOpt {
    int i;
    int j;
};

inline std::size_t two_opt_move_count(std::size_t n) {
    return n * (n - 1) / 2 - 1;
}

inline TwoOpt two_opt_decode(std::size_t idx, std::size_t n) {
    // Lexicographic rank over pairs 0 <= i < j < n, skipping (0, n-1).
    if (idx >= n - 2) ++idx; // pairs (0,1)..(0,n-2) keep rank, everything after shifts
    std::size_t i = 0;
    std::size_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        --row;
        ++i;
    }
    return TwoOpt{static_cast<int>(i), static_cast<int>(i + 1 + idx)};
}

inline double two_opt_gain(const Tour& t, const TspInstance& inst, const TwoOpt& mv) {
    const std::size_t n = t.size();
    const int a = t[(mv.i + n - 1) % n];
    const int b = t[mv.i];
    const int c = t[mv.j];
    const int d = t[(mv.j + 1) % n];
    return inst.dist(a, b) + inst.dist(c, d) - inst.dist(a, c) - inst.dist(b, d);
}

} // namespace detail

inline bool has_improving_two_opt(const Tour& t, const TspInstance& inst) {
    const double eps = improvement_epsilon(tour_length(t, inst));
    const std::size_t m = detail::two_opt_move_count(t.size());
    for (std::size_t idx = 0; idx < m; ++idx) {
        if (detail::two_opt_gain(t, inst, detail::two_opt_decode(idx, t.size())) > eps)
            return true;
    }
    return false;
}

// First-improvement 2-opt descent from a seeded uniform random permutation.
// The move scan order is a fresh seeded permutation after every acceptance.
inline Tour tsp_local_search(const TspInstance& inst, Rng& rng) {
    if (inst.size() < 4) throw Error("tsp sampler needs at least four vertices");
    Tour t(inst.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
    rng.shuffle(t);

    const std::size_t m = detail::two_opt_move_count(t.size());
    for (;;) {
        const double eps = improvement_epsilon(tour_length(t, inst));
        ShuffledScan scan(m, rng);
        std::size_t idx;
        bool moved = false;
        while (scan.next(idx)) {
            const auto mv = detail::two_opt_decode(idx, t.size());
            if (detail::two_opt_gain(t, inst, mv) > eps) {
                std::reverse(t.begin() + mv.i, t.begin() + mv.j + 1);
                moved = true;
                break;
            }
        }
        if (!moved) return t;
    }
}

// Edge-set view of a tour: n unordered vertex pairs along the cycle.
inline ElementSet tour_edge_set(const Tour& t) {
    std::vector<std::uint64_t> ids;
    ids.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        ids.push_back(edge_element(static_cast<std::uint32_t>(t[i]),
                                   static_cast<std::uint32_t>(t[(i + 1) % t.size()])));
    }
    return ElementSet(std::move(ids));
}

} // namespace scs
