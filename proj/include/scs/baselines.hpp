#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/graph.hpp"
#include "scs/sp_sampler.hpp"

namespace scs {

struct BaselineBudget {
    int target_count = 1;        // n_s: distinct solutions wanted
    long iteration_cap = 100000; // hard stop

    void validate() const {
        if (target_count < 1) throw Error("target count must be at least 1");
        if (iteration_cap < target_count) throw Error("iteration cap below target count");
    }
};

// Multi-start local search: repeat the sampler and keep the first
// target_count distinct solutions in arrival order. One iteration is one
// sampler run; a short result after the cap is returned as-is.
template <class Sol, class SampleFn, class KeyFn>
std::vector<Sol> msls(SampleFn&& sample, KeyFn&& key_of, const BaselineBudget& budget) {
    budget.validate();
    std::vector<Sol> out;
    std::set<ElementSet> seen;
    for (long iter = 0; iter < budget.iteration_cap; ++iter) {
        Sol s = sample(iter);
        if (seen.insert(key_of(s)).second) out.push_back(std::move(s));
        if (static_cast<int>(out.size()) >= budget.target_count) break;
    }
    return out;
}

namespace detail {

// Restriction of a graph used by Yen's spur searches: some vertices banned,
// some edges banned.
struct MaskedGraph {
    const WeightedGraph* g;
    std::vector<char> vertex_banned;
    std::set<std::pair<int, int>> edge_banned; // stored as (min,max)

    bool edge_ok(int u, int v) const {
        if (vertex_banned[u] || vertex_banned[v]) return false;
        return !edge_banned.count(std::minmax(u, v));
    }
};

// Shortest s-t path whose vertex sequence is lexicographically smallest
// among all minimum-weight paths in the masked graph. Distances are computed
// from the sink; the path then greedily steps to the smallest neighbor that
// stays on a shortest path. Returns an empty path when t is unreachable.
inline Path lexmin_shortest_path(const MaskedGraph& mg, int s, int t) {
    const WeightedGraph& g = *mg.g;
    std::vector<double> dist(g.vertex_count, kInfDist);
    dist[t] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    if (!mg.vertex_banned[t]) heap.emplace(0.0, t);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : g.adjacency[u]) {
            if (!mg.edge_ok(u, v)) continue;
            if (d + w < dist[v]) {
                dist[v] = d + w;
                heap.emplace(dist[v], v);
            }
        }
    }
    if (mg.vertex_banned[s] || dist[s] == kInfDist) return {};
    Path p{s};
    int cur = s;
    while (cur != t) {
        int next = -1;
        for (const auto& [v, w] : g.adjacency[cur]) {
            if (!mg.edge_ok(cur, v)) continue;
            if (dist[v] + w == dist[cur] && (next < 0 || v < next)) next = v;
        }
        if (next < 0) return {};
        p.push_back(next);
        cur = next;
    }
    return p;
}

struct YenCandidateLess {
    bool operator()(const std::pair<double, Path>& a, const std::pair<double, Path>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

// Produces loopless s-t paths one at a time, in nondecreasing weight with
// equal weights ordered lexicographically by vertex sequence (the spur
// searches and the candidate heap both resolve ties that way).
class YenEnumerator {
public:
    explicit YenEnumerator(const WeightedGraph& g) : g_(&g) {
        MaskedGraph base{g_, std::vector<char>(g.vertex_count, 0), {}};
        Path first = lexmin_shortest_path(base, g.source, g.sink);
        if (first.empty()) throw Error("sink unreachable from source");
        known_.insert(first);
        pending_ = std::move(first);
        has_pending_ = true;
    }

    // Next path in order; empty when the enumeration is exhausted.
    Path next() {
        if (has_pending_) {
            has_pending_ = false;
            accepted_.push_back(pending_);
            return pending_;
        }
        const Path& prev = accepted_.back();
        for (std::size_t spur = 0; spur + 1 < prev.size(); ++spur) {
            MaskedGraph mg{g_, std::vector<char>(g_->vertex_count, 0), {}};
            const auto root_begin = prev.begin();
            const auto root_end = prev.begin() + static_cast<std::ptrdiff_t>(spur) + 1;
            for (const Path& a : accepted_) {
                if (a.size() > spur + 1 && std::equal(root_begin, root_end, a.begin())) {
                    mg.edge_banned.insert(std::minmax(a[spur], a[spur + 1]));
                }
            }
            for (std::size_t i = 0; i < spur; ++i) mg.vertex_banned[prev[i]] = 1;

            Path tail = lexmin_shortest_path(mg, prev[spur], g_->sink);
            if (tail.empty()) continue;
            Path cand(root_begin, root_end);
            cand.insert(cand.end(), tail.begin() + 1, tail.end());
            if (known_.count(cand)) continue;
            const double w = path_length(cand, *g_);
            known_.insert(cand);
            candidates_.emplace(w, std::move(cand));
        }
        if (candidates_.empty()) return {};
        auto top = candidates_.begin();
        accepted_.push_back(top->second);
        candidates_.erase(top);
        return accepted_.back();
    }

private:
    const WeightedGraph* g_;
    std::vector<Path> accepted_;
    std::set<std::pair<double, Path>, YenCandidateLess> candidates_;
    std::set<Path> known_;
    Path pending_;
    bool has_pending_ = false;
};

} // namespace detail

// Yen's k-shortest loopless paths. One iteration is one finalized path;
// stops at the budget's target, the cap, or exhaustion.
inline std::vector<Path> yen_k_shortest(const WeightedGraph& g, const BaselineBudget& budget) {
    budget.validate();
    detail::YenEnumerator yen(g);
    std::vector<Path> out;
    for (long iter = 0; iter < budget.iteration_cap &&
                        static_cast<int>(out.size()) < budget.target_count;
         ++iter) {
        Path p = yen.next();
        if (p.empty()) break;
        out.push_back(std::move(p));
    }
    return out;
}

// One accepted first-improvement move (with cycle removal).
inline Path descend_once(const SpContext& ctx, Path p, Rng& rng) {
    const SpNeighborhood nbh(p, ctx.relaxed);
    const double eps = improvement_epsilon(path_length(p, ctx.relaxed));
    ShuffledScan scan(nbh.size(), rng);
    std::size_t idx;
    while (scan.next(idx)) {
        SpNeighborhood::Move mv;
        if (!nbh.decode(idx, mv)) continue;
        if (nbh.gain(mv) <= eps) continue;
        Path q = nbh.apply(mv);
        if (!is_simple_path(q)) q = remove_cycles(std::move(q));
        return q;
    }
    return p;
}

enum class YenLsMode {
    FilterLocalOptima,  // keep Yen paths that are already local optima
    TransformThenDedup, // descend from each Yen path, keep distinct results
};

// Yen's enumeration combined with local optimality on the relaxed graph.
// Every path Yen produces counts against the iteration cap; only those that
// survive the mode's rule are returned, up to the budget's target. May return
// fewer than target_count paths (or none) when the cap bites first.
inline std::vector<Path> yen_ls(const SpContext& ctx, const BaselineBudget& budget,
                                YenLsMode mode = YenLsMode::FilterLocalOptima,
                                Rng* transform_rng = nullptr) {
    budget.validate();
    detail::YenEnumerator yen(ctx.graph);
    std::vector<Path> retained;
    std::set<ElementSet> retained_keys;
    for (long iter = 0; iter < budget.iteration_cap &&
                        static_cast<int>(retained.size()) < budget.target_count;
         ++iter) {
        Path p = yen.next();
        if (p.empty()) break;
        if (mode == YenLsMode::FilterLocalOptima) {
            if (!has_improving_sp_move(p, ctx.relaxed)) retained.push_back(std::move(p));
        } else {
            if (!transform_rng) throw Error("transform mode needs an rng");
            while (has_improving_sp_move(p, ctx.relaxed)) {
                p = descend_once(ctx, std::move(p), *transform_rng);
            }
            if (retained_keys.insert(path_edge_set(p)).second) retained.push_back(std::move(p));
        }
    }
    return retained;
}

} // namespace scs
