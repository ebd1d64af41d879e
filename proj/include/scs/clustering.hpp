#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"

namespace scs {

// Undirected graph over sampled-solution indices.
struct SolutionGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists

    bool has_edge(int u, int v) const {
        const auto& a = adjacency[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& a : adjacency) deg += a.size();
        return deg / 2;
    }

    friend bool operator==(const SolutionGraph& a, const SolutionGraph& b) {
        return a.n == b.n && a.adjacency == b.adjacency;
    }
};

struct ClusterParams {
    double delta = 0.1;     // quantile of non-zero dissimilarities kept as edges
    double theta = 0.15;    // resemblance threshold for polishing
    int min_size = 5;       // smallest cluster reported
    int max_reps = 99;      // polishing sweep cap
};

// Possibly overlapping clusters of solution indices.
struct ClusterSet {
    std::vector<std::vector<int>> clusters;
    int min_size = 1;
};

namespace detail {

// Bit-row adjacency used by polishing and clique enumeration.
class BitGraph {
public:
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), rows_(n, std::vector<std::uint64_t>(words_, 0)) {}

    static BitGraph from(const SolutionGraph& g) {
        BitGraph b(g.n);
        for (int u = 0; u < g.n; ++u) {
            for (int v : g.adjacency[u]) b.set(u, v);
        }
        return b;
    }

    int size() const { return n_; }
    std::size_t words() const { return words_; }
    const std::vector<std::uint64_t>& row(int u) const { return rows_[u]; }

    void set(int u, int v) {
        rows_[u][v / 64] |= 1ULL << (v % 64);
    }

    bool test(int u, int v) const {
        return (rows_[u][v / 64] >> (v % 64)) & 1ULL;
    }

    SolutionGraph to_graph() const {
        SolutionGraph g;
        g.n = n_;
        g.adjacency.assign(n_, {});
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                if (test(u, v)) g.adjacency[u].push_back(v);
            }
        }
        return g;
    }

    friend bool operator==(const BitGraph& a, const BitGraph& b) { return a.rows_ == b.rows_; }

private:
    int n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

inline int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

} // namespace detail

// Ceiling of delta * count with a nudge against floating-point excess, so an
// exact integer product never rounds up to the next rank.
inline std::size_t quantile_rank(double delta, std::size_t count) {
    const double x = delta * static_cast<double>(count);
    auto k = static_cast<std::size_t>(std::ceil(x - 1e-9));
    if (k < 1) k = 1;
    if (k > count) k = count;
    return k;
}

// Connects solution pairs whose dissimilarity is at most the
// ceil(delta * n+)-th smallest non-zero pairwise value. Zero-dissimilarity
// pairs (duplicate solutions) always fall under the threshold.
inline SolutionGraph build_adjacency(const DissimilarityMatrix& m, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0,1)");
    const std::size_t n = m.size();
    std::vector<double> nonzero;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) > 0.0) nonzero.push_back(m.at(i, j));
        }
    }
    if (nonzero.empty()) throw Error("no dissimilar pairs to threshold");
    const std::size_t k = quantile_rank(delta, nonzero.size());
    std::nth_element(nonzero.begin(), nonzero.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     nonzero.end());
    const double tau = nonzero[k - 1];

    SolutionGraph g;
    g.n = static_cast<int>(n);
    g.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) <= tau) {
                g.adjacency[i].push_back(static_cast<int>(j));
                g.adjacency[j].push_back(static_cast<int>(i));
            }
        }
    }
    return g;
}

// Jaccard similarity of closed neighborhoods (each vertex counts as its own
// neighbor), the polishing edge criterion.
inline double resemblance(const SolutionGraph& g, int u, int v) {
    std::vector<int> nu = g.adjacency[u];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), u), u);
    std::vector<int> nv = g.adjacency[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
    std::size_t inter = 0, i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (nu[i] < nv[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t uni = nu.size() + nv.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

// Data polishing: replace the edge set by the pairs whose closed-neighborhood
// resemblance reaches theta, and repeat until the graph stops changing or
// max_reps sweeps have run. On the fixpoint, clusters appear as cliques.
inline SolutionGraph data_polish(const SolutionGraph& g, double theta, int max_reps) {
    if (!(theta > 0.0 && theta <= 1.0)) throw Error("theta must lie in (0,1]");
    if (max_reps < 1) throw Error("max_reps must be at least 1");
    detail::BitGraph cur = detail::BitGraph::from(g);
    std::vector<int> closed_degree(g.n);
    for (int rep = 0; rep < max_reps; ++rep) {
        // Closed neighborhoods: row plus self bit.
        detail::BitGraph closed = cur;
        for (int u = 0; u < g.n; ++u) closed.set(u, u);
        for (int u = 0; u < g.n; ++u) {
            closed_degree[u] = detail::popcount_and(closed.row(u), closed.row(u));
        }
        detail::BitGraph next(g.n);
        for (int u = 0; u < g.n; ++u) {
            for (int v = u + 1; v < g.n; ++v) {
                const int inter = detail::popcount_and(closed.row(u), closed.row(v));
                const int uni = closed_degree[u] + closed_degree[v] - inter;
                if (static_cast<double>(inter) >= theta * static_cast<double>(uni)) {
                    next.set(u, v);
                    next.set(v, u);
                }
            }
        }
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur.to_graph();
}

namespace detail {

constexpr std::size_t kCliqueCap = 1000000;

class CliqueEnumerator {
public:
    CliqueEnumerator(const BitGraph& g, std::vector<std::vector<int>>& out)
        : g_(g), out_(out), words_(g.words()) {}

    void run() {
        const int n = g_.size();
        const std::vector<int> order = degeneracy_order();
        std::vector<std::uint64_t> later(words_), earlier(words_);
        std::vector<char> done(n, 0);
        for (int v : order) {
            std::fill(later.begin(), later.end(), 0);
            std::fill(earlier.begin(), earlier.end(), 0);
            for (int u = 0; u < n; ++u) {
                if (!g_.test(v, u)) continue;
                auto& dst = done[u] ? earlier : later;
                dst[u / 64] |= 1ULL << (u % 64);
            }
            clique_.push_back(v);
            expand(later, earlier);
            clique_.pop_back();
            done[v] = 1;
        }
    }

private:
    std::vector<int> degeneracy_order() const {
        const int n = g_.size();
        std::vector<int> deg(n), order;
        std::vector<char> removed(n, 0);
        for (int u = 0; u < n; ++u) deg[u] = popcount_and(g_.row(u), g_.row(u));
        order.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int u = 0; u < n; ++u) {
                if (!removed[u] && (best < 0 || deg[u] < deg[best])) best = u;
            }
            removed[best] = 1;
            order.push_back(best);
            for (int u = 0; u < n; ++u) {
                if (!removed[u] && g_.test(best, u)) --deg[u];
            }
        }
        return order;
    }

    static bool empty(const std::vector<std::uint64_t>& s) {
        for (auto w : s) {
            if (w) return false;
        }
        return true;
    }

    void expand(std::vector<std::uint64_t> p, std::vector<std::uint64_t> x) {
        if (empty(p) && empty(x)) {
            if (out_.size() >= kCliqueCap)
                throw Error("clique enumeration exceeded 1000000 cliques; "
                            "tighten the clustering parameters");
            out_.push_back(clique_);
            return;
        }
        const int pivot = pick_pivot(p, x);
        std::vector<std::uint64_t> candidates(words_);
        for (std::size_t w = 0; w < words_; ++w) {
            candidates[w] = p[w] & ~g_.row(pivot)[w];
        }
        for (int v = 0; v < g_.size(); ++v) {
            if (!((candidates[v / 64] >> (v % 64)) & 1ULL)) continue;
            std::vector<std::uint64_t> np(words_), nx(words_);
            for (std::size_t w = 0; w < words_; ++w) {
                np[w] = p[w] & g_.row(v)[w];
                nx[w] = x[w] & g_.row(v)[w];
            }
            clique_.push_back(v);
            expand(std::move(np), std::move(nx));
            clique_.pop_back();
            p[v / 64] &= ~(1ULL << (v % 64));
            x[v / 64] |= 1ULL << (v % 64);
        }
    }

    int pick_pivot(const std::vector<std::uint64_t>& p, const std::vector<std::uint64_t>& x) const {
        int best = -1, best_cover = -1;
        for (int u = 0; u < g_.size(); ++u) {
            const bool in_p = (p[u / 64] >> (u % 64)) & 1ULL;
            const bool in_x = (x[u / 64] >> (u % 64)) & 1ULL;
            if (!in_p && !in_x) continue;
            int cover = 0;
            for (std::size_t w = 0; w < words_; ++w) {
                cover += __builtin_popcountll(p[w] & g_.row(u)[w]);
            }
            if (cover > best_cover) {
                best_cover = cover;
                best = u;
            }
        }
        return best;
    }

    const BitGraph& g_;
    std::vector<std::vector<int>>& out_;
    std::size_t words_;
    std::vector<int> clique_;
};

} // namespace detail

// All maximal cliques of at least min_size vertices, in canonical order:
// size descending, then lexicographic.
inline ClusterSet maximal_cliques(const SolutionGraph& g, int min_size) {
    if (min_size < 1) throw Error("min_size must be at least 1");
    const detail::BitGraph bits = detail::BitGraph::from(g);
    std::vector<std::vector<int>> cliques;
    detail::CliqueEnumerator(bits, cliques).run();
    ClusterSet out;
    out.min_size = min_size;
    for (auto& c : cliques) {
        if (static_cast<int>(c.size()) < min_size) continue;
        std::sort(c.begin(), c.end());
        out.clusters.push_back(std::move(c));
    }
    std::sort(out.clusters.begin(), out.clusters.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

// The clustering step end to end: quantile adjacency, polishing, cliques.
inline ClusterSet micro_cluster(const DissimilarityMatrix& m, const ClusterParams& params) {
    const SolutionGraph adj = build_adjacency(m, params.delta);
    const SolutionGraph polished = data_polish(adj, params.theta, params.max_reps);
    return maximal_cliques(polished, params.min_size);
}

} // namespace scs
