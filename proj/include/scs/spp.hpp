#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/rng.hpp"

namespace scs {

// One candidate set: the grid cells inside an axis-aligned rectangle,
// with 1-based inclusive bounds on an n1 x n2 grid.
struct RectSet {
    int a1, b1; // rows
    int a2, b2; // columns
    long cost;
};

// Rectangle set packing instance: grid of n1 x n2 cells and a family of
// rectangle sets with positive integer costs and pairwise distinct cell sets.
class SppInstance {
public:
    static SppInstance build(int n1, int n2, std::vector<RectSet> sets) {
        if (n1 < 1 || n2 < 1) throw Error("grid dimensions must be positive");
        SppInstance inst;
        inst.n1_ = n1;
        inst.n2_ = n2;
        inst.sets_ = std::move(sets);
        std::set<std::tuple<int, int, int, int>> seen;
        for (const auto& s : inst.sets_) {
            if (s.a1 < 1 || s.a1 > s.b1 || s.b1 > n1 || s.a2 < 1 || s.a2 > s.b2 || s.b2 > n2)
                throw Error("set is not a rectangle of the grid");
            if (s.cost < 1) throw Error("set costs must be positive integers");
            if (!seen.insert({s.a1, s.b1, s.a2, s.b2}).second)
                throw Error("two sets share the same elements");
        }
        inst.build_masks();
        return inst;
    }

    int rows() const { return n1_; }
    int cols() const { return n2_; }
    std::size_t family_size() const { return sets_.size(); }
    const std::vector<RectSet>& sets() const { return sets_; }
    const RectSet& set(int i) const { return sets_[i]; }

    long set_cells(int i) const {
        const auto& s = sets_[i];
        return static_cast<long>(s.b1 - s.a1 + 1) * (s.b2 - s.a2 + 1);
    }

    // 0-based cell id for a 1-based grid position.
    int cell_id(int x1, int x2) const { return (x1 - 1) * n2_ + (x2 - 1); }

    bool sets_overlap(int i, int j) const {
        const auto& a = masks_[i];
        const auto& b = masks_[j];
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (a[w] & b[w]) return true;
        }
        return false;
    }

    const std::vector<std::uint64_t>& mask(int i) const { return masks_[i]; }
    std::size_t mask_words() const { return words_; }

private:
    void build_masks() {
        words_ = (static_cast<std::size_t>(n1_) * n2_ + 63) / 64;
        masks_.assign(sets_.size(), std::vector<std::uint64_t>(words_, 0));
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const auto& s = sets_[i];
            for (int x1 = s.a1; x1 <= s.b1; ++x1) {
                for (int x2 = s.a2; x2 <= s.b2; ++x2) {
                    const int c = cell_id(x1, x2);
                    masks_[i][c / 64] |= 1ULL << (c % 64);
                }
            }
        }
    }

    int n1_ = 0;
    int n2_ = 0;
    std::vector<RectSet> sets_;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::size_t words_ = 0;
};

// Chosen family indices, kept sorted.
using Packing = std::vector<int>;

inline bool is_packing(const Packing& p, const SppInstance& inst) {
    std::vector<std::uint64_t> occ(inst.mask_words(), 0);
    for (int i : p) {
        const auto& m = inst.mask(i);
        for (std::size_t w = 0; w < occ.size(); ++w) {
            if (occ[w] & m[w]) return false;
            occ[w] |= m[w];
        }
    }
    return true;
}

inline long packing_weight(const Packing& p, const SppInstance& inst) {
    long total = 0;
    for (int i : p) total += inst.set(i).cost;
    return total;
}

namespace detail {

// Add one non-chosen set, or swap one chosen set for a non-chosen one,
// keeping feasibility. Moves are indexed as adds first, then swaps in
// (chosen, candidate) order.
struct SppMoveSpace {
    const SppInstance* inst;
    const Packing* packing;
    std::vector<int> outside; // family indices not in the packing
    std::vector<std::uint64_t> occupancy;

    SppMoveSpace(const SppInstance& instance, const Packing& p) : inst(&instance), packing(&p) {
        occupancy.assign(instance.mask_words(), 0);
        for (int i : p) {
            const auto& m = instance.mask(i);
            for (std::size_t w = 0; w < occupancy.size(); ++w) occupancy[w] |= m[w];
        }
        std::size_t next = 0;
        for (int i = 0; i < static_cast<int>(instance.family_size()); ++i) {
            if (next < p.size() && p[next] == i) {
                ++next;
            } else {
                outside.push_back(i);
            }
        }
    }

    std::size_t size() const { return outside.size() + packing->size() * outside.size(); }

    // Decodes move idx into (removed, added); removed == -1 for pure adds.
    // Returns false when the move breaks feasibility.
    bool decode(std::size_t idx, int& removed, int& added) const {
        if (idx < outside.size()) {
            removed = -1;
            added = outside[idx];
            return fits(added, -1);
        }
        idx -= outside.size();
        removed = (*packing)[idx / outside.size()];
        added = outside[idx % outside.size()];
        return fits(added, removed);
    }

    bool fits(int added, int removed) const {
        const auto& m = inst->mask(added);
        if (removed < 0) {
            for (std::size_t w = 0; w < occupancy.size(); ++w) {
                if (occupancy[w] & m[w]) return false;
            }
            return true;
        }
        const auto& r = inst->mask(removed);
        for (std::size_t w = 0; w < occupancy.size(); ++w) {
            if ((occupancy[w] & ~r[w]) & m[w]) return false;
        }
        return true;
    }
};

} // namespace detail

// Enumerates the feasible neighbors of a packing (adds and swaps).
template <class Fn>
inline void for_each_spp_neighbor(const Packing& p, const SppInstance& inst, Fn&& fn) {
    detail::SppMoveSpace space(inst, p);
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        int removed, added;
        if (space.decode(idx, removed, added)) fn(removed, added);
    }
}

inline bool has_improving_spp_move(const Packing& p, const SppInstance& inst) {
    bool found = false;
    for_each_spp_neighbor(p, inst, [&](int removed, int added) {
        const long delta = inst.set(added).cost - (removed >= 0 ? inst.set(removed).cost : 0);
        if (delta > 0) found = true;
    });
    return found;
}

inline Packing apply_spp_move(Packing p, int removed, int added) {
    if (removed >= 0) p.erase(std::find(p.begin(), p.end(), removed));
    p.insert(std::lower_bound(p.begin(), p.end(), added), added);
    return p;
}

// First-improvement ascent from the empty packing. Scan order is a fresh
// seeded permutation per pass; the randomized early adds double as the
// randomization of the starting point, and accepted moves strictly increase
// the packed weight, so the walk terminates at a local optimum.
inline Packing spp_local_search(const SppInstance& inst, Rng& rng) {
    Packing p;
    for (;;) {
        detail::SppMoveSpace space(inst, p);
        ShuffledScan scan(space.size(), rng);
        std::size_t idx;
        bool moved = false;
        while (scan.next(idx)) {
            int removed, added;
            if (!space.decode(idx, removed, added)) continue;
            const long delta = inst.set(added).cost - (removed >= 0 ? inst.set(removed).cost : 0);
            if (delta <= 0) continue;
            p = apply_spp_move(std::move(p), removed, added);
            moved = true;
            break;
        }
        if (!moved) return p;
    }
}

// Primary dissimilarity view: the chosen family indices.
inline ElementSet packing_element_view(const Packing& p) {
    std::vector<std::uint64_t> ids(p.begin(), p.end());
    return ElementSet(std::move(ids));
}

// Alternative view: the grid cells covered by the chosen sets.
inline ElementSet packing_cell_view(const Packing& p, const SppInstance& inst) {
    std::vector<std::uint64_t> ids;
    for (int i : p) {
        const auto& s = inst.set(i);
        for (int x1 = s.a1; x1 <= s.b1; ++x1) {
            for (int x2 = s.a2; x2 <= s.b2; ++x2) {
                ids.push_back(static_cast<std::uint64_t>(inst.cell_id(x1, x2)));
            }
        }
    }
    return ElementSet(std::move(ids));
}

} // namespace scs
