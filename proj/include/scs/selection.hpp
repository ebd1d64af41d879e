#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <vector>

#include "scs/clustering.hpp"
#include "scs/diversity.hpp"
#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/rng.hpp"

namespace scs {

enum class CriterionTag { Min, Avg, Sp };

// Which solutions the removal criterion measures distances against: every
// remaining solution across clusters, or only the remaining members of the
// cluster being shrunk.
enum class CriterionScope { AllRemaining, ClusterOnly };

struct SelectionCriterion {
    CriterionTag tag = CriterionTag::Sp;
    SolowPolaskyConfig sp{};
    CriterionScope scope = CriterionScope::AllRemaining;

    static SelectionCriterion min_distance() { return {CriterionTag::Min, {}, CriterionScope::AllRemaining}; }
    static SelectionCriterion avg_distance() { return {CriterionTag::Avg, {}, CriterionScope::AllRemaining}; }
    static SelectionCriterion solow_polasky(double beta) {
        return {CriterionTag::Sp, SolowPolaskyConfig{beta}, CriterionScope::AllRemaining};
    }
};

// Pairwise disjoint clusters over the deduplicated sample.
struct DisjointClusters {
    std::vector<std::vector<int>> clusters;
};

// Setup before selection: collapse identical solutions onto their
// lowest-index representative (merging cluster memberships), then resolve
// multi-assigned solutions by keeping each in one of its smallest clusters.
// Solutions are processed in ascending index order; smallest-cluster ties go
// to the lowest cluster index. Empty clusters are dropped.
inline DisjointClusters setup(const std::vector<ElementSet>& solutions, const ClusterSet& cs) {
    const int n = static_cast<int>(solutions.size());
    std::vector<int> representative(n);
    std::map<ElementSet, int> first_seen;
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = first_seen.try_emplace(solutions[i], i);
        representative[i] = it->second;
        (void)inserted;
    }

    std::vector<std::vector<int>> clusters;
    clusters.reserve(cs.clusters.size());
    for (const auto& c : cs.clusters) {
        std::vector<int> mapped;
        mapped.reserve(c.size());
        for (int i : c) {
            if (i < 0 || i >= n) throw Error("cluster index out of range");
            mapped.push_back(representative[i]);
        }
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        clusters.push_back(std::move(mapped));
    }

    std::vector<std::vector<int>> memberships(n);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (int i : clusters[c]) memberships[i].push_back(static_cast<int>(c));
    }

    for (int i = 0; i < n; ++i) {
        if (memberships[i].size() <= 1) continue;
        int keep = memberships[i][0];
        for (int c : memberships[i]) {
            if (clusters[c].size() < clusters[keep].size()) keep = c;
        }
        for (int c : memberships[i]) {
            if (c == keep) continue;
            auto& cl = clusters[c];
            cl.erase(std::lower_bound(cl.begin(), cl.end(), i));
        }
        memberships[i].assign(1, keep);
    }

    DisjointClusters out;
    for (auto& c : clusters) {
        if (!c.empty()) out.clusters.push_back(std::move(c));
    }
    return out;
}

namespace detail {

inline std::size_t break_tie(const std::vector<std::size_t>& tied, Rng* rng) {
    return (rng && tied.size() > 1) ? tied[rng->index(tied.size())] : tied.front();
}

// Scores each cluster member for removal under the min- or avg-distance criterion:
// lower is removed first.
inline std::vector<double> distance_scores(const std::vector<int>& cluster,
                                           const std::vector<int>& scope_set,
                                           const DissimilarityMatrix& m, CriterionTag tag) {
    std::vector<double> score(cluster.size());
    for (std::size_t a = 0; a < cluster.size(); ++a) {
        const int i = cluster[a];
        double min_d = std::numeric_limits<double>::infinity();
        double sum_d = 0.0;
        for (int j : scope_set) {
            if (j == i) continue;
            const double d = m.at(i, j);
            min_d = std::min(min_d, d);
            sum_d += d;
        }
        score[a] = tag == CriterionTag::Min ? min_d : sum_d;
    }
    return score;
}

} // namespace detail

// The solution to remove from `cluster`, judged against `remaining` (all
// still-standing solutions across clusters). Min removes the member with the
// smallest minimum distance, Avg the one with the smallest summed distance,
// Sp the one whose removal costs the least Solow-Polasky diversity. Ties are
// broken by the seeded rng when supplied, otherwise by lowest solution index.
inline int criterion_remove(const std::vector<int>& cluster, const std::vector<int>& remaining,
                            const DissimilarityMatrix& m, const SelectionCriterion& crit,
                            Rng* tie_rng = nullptr) {
    if (cluster.size() < 2) throw Error("criterion_remove needs at least two candidates");
    const std::vector<int>& scope_set =
        crit.scope == CriterionScope::ClusterOnly ? cluster : remaining;

    std::vector<double> score;
    bool pick_max = false;
    if (crit.tag == CriterionTag::Sp) {
        std::vector<int> ordered = scope_set;
        std::sort(ordered.begin(), ordered.end());
        SolowPolaskyEliminator state(m, ordered, crit.sp);
        score.resize(cluster.size());
        for (std::size_t a = 0; a < cluster.size(); ++a) {
            const auto& idx = state.indices();
            const auto pos = std::lower_bound(idx.begin(), idx.end(), cluster[a]) - idx.begin();
            score[a] = state.diversity_without(static_cast<std::size_t>(pos));
        }
        pick_max = true;
    } else {
        score = detail::distance_scores(cluster, scope_set, m, crit.tag);
    }

    const double tol = diversity_tolerance(scope_set.size());
    double best = pick_max ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    for (double s : score) best = pick_max ? std::max(best, s) : std::min(best, s);
    std::vector<std::size_t> tied;
    for (std::size_t a = 0; a < cluster.size(); ++a) {
        if (pick_max ? score[a] >= best - tol : score[a] <= best + tol) tied.push_back(a);
    }
    return cluster[detail::break_tie(tied, tie_rng)];
}

namespace detail {

// One greedy removal out of `positions` (state positions of the active
// cluster's members), maximizing the diversity of the remainder.
inline std::size_t sp_pick(const SolowPolaskyEliminator& state,
                           const std::vector<std::size_t>& positions, Rng* tie_rng) {
    const double tol = diversity_tolerance(state.size());
    std::vector<double> value(positions.size());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < positions.size(); ++a) {
        value[a] = state.diversity_without(positions[a]);
        best = std::max(best, value[a]);
    }
    std::vector<std::size_t> tied;
    for (std::size_t a = 0; a < positions.size(); ++a) {
        if (value[a] >= best - tol) tied.push_back(a);
    }
    return positions[break_tie(tied, tie_rng)];
}

inline std::vector<std::size_t> state_positions(const SolowPolaskyEliminator& state,
                                                const std::vector<int>& members) {
    std::vector<std::size_t> positions;
    positions.reserve(members.size());
    const auto& idx = state.indices();
    for (int i : members) {
        positions.push_back(static_cast<std::size_t>(
            std::lower_bound(idx.begin(), idx.end(), i) - idx.begin()));
    }
    return positions;
}

} // namespace detail

// Greedy per-cluster elimination: repeatedly take a largest cluster (ties to
// the lowest cluster index) and remove one member by the criterion until all
// clusters are singletons; the union of survivors is the representative set.
// The solow-polasky criterion keeps an incremental inverse of the kernel
// (one global state when the scope spans all remaining solutions, one per
// cluster otherwise) so the whole elimination stays cubic.
inline std::vector<int> select(const DisjointClusters& dc, const DissimilarityMatrix& m,
                               const SelectionCriterion& crit, Rng* tie_rng = nullptr) {
    std::vector<std::vector<int>> clusters = dc.clusters;

    const bool sp_cluster = crit.tag == CriterionTag::Sp && crit.scope == CriterionScope::ClusterOnly;
    const bool sp_global = crit.tag == CriterionTag::Sp && crit.scope == CriterionScope::AllRemaining;
    std::vector<std::unique_ptr<SolowPolaskyEliminator>> cluster_state(clusters.size());
    std::unique_ptr<SolowPolaskyEliminator> global_state;

    std::vector<int> remaining;
    for (const auto& c : clusters) remaining.insert(remaining.end(), c.begin(), c.end());
    std::sort(remaining.begin(), remaining.end());

    for (;;) {
        std::size_t biggest = 0;
        for (std::size_t c = 1; c < clusters.size(); ++c) {
            if (clusters[c].size() > clusters[biggest].size()) biggest = c;
        }
        if (clusters.empty() || clusters[biggest].size() <= 1) break;

        auto& cluster = clusters[biggest];
        int removed;
        if (sp_cluster) {
            auto& state = cluster_state[biggest];
            if (!state) state = std::make_unique<SolowPolaskyEliminator>(m, cluster, crit.sp);
            const auto positions = detail::state_positions(*state, cluster);
            const std::size_t pick = detail::sp_pick(*state, positions, tie_rng);
            removed = state->indices()[pick];
            state->remove(pick);
        } else if (sp_global) {
            if (!global_state)
                global_state = std::make_unique<SolowPolaskyEliminator>(m, remaining, crit.sp);
            const auto positions = detail::state_positions(*global_state, cluster);
            const std::size_t pick = detail::sp_pick(*global_state, positions, tie_rng);
            removed = global_state->indices()[pick];
            global_state->remove(pick);
        } else {
            removed = criterion_remove(cluster, remaining, m, crit, tie_rng);
        }

        cluster.erase(std::lower_bound(cluster.begin(), cluster.end(), removed));
        remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), removed));
    }

    std::vector<int> out;
    for (const auto& c : clusters) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace scs
