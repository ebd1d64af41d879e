#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "scs/error.hpp"

namespace scs {

// Canonical element-set view of a solution: a sorted, duplicate-free list of
// opaque element ids. Paths and tours contribute their edges, packings their
// chosen set indices; all dissimilarity computations run on this view.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(std::vector<std::uint64_t> elements) : elems_(std::move(elements)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    ElementSet(std::initializer_list<std::uint64_t> elements)
        : ElementSet(std::vector<std::uint64_t>(elements)) {}

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<std::uint64_t>& elements() const { return elems_; }

    bool contains(std::uint64_t e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.elems_ == b.elems_;
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }
    friend bool operator<(const ElementSet& a, const ElementSet& b) {
        return a.elems_ < b.elems_;
    }

private:
    std::vector<std::uint64_t> elems_;
};

// Encodes an unordered vertex pair as one element id.
inline std::uint64_t edge_element(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline std::pair<std::uint32_t, std::uint32_t> decode_edge_element(std::uint64_t id) {
    return {static_cast<std::uint32_t>(id >> 32), static_cast<std::uint32_t>(id & 0xffffffffULL)};
}

// Jaccard distance 1 - |A n B| / |A u B|. Two empty sets are identical
// solutions (the empty packing), so their distance is 0.
inline double jaccard_distance(const ElementSet& a, const ElementSet& b) {
    const auto& x = a.elements();
    const auto& y = b.elements();
    std::size_t inter = 0, i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (x[i] < y[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t uni = x.size() + y.size() - inter;
    if (uni == 0) return 0.0;
    return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

// Symmetric n x n matrix of pairwise dissimilarities, zero diagonal,
// entries in [0, 1].
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    explicit DissimilarityMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double d) {
        data_[i * n_ + j] = d;
        data_[j * n_ + i] = d;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

inline DissimilarityMatrix pairwise_matrix(const std::vector<ElementSet>& solutions) {
    if (solutions.empty()) throw Error("no solutions");
    DissimilarityMatrix m(solutions.size());
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        for (std::size_t j = i + 1; j < solutions.size(); ++j) {
            m.set(i, j, jaccard_distance(solutions[i], solutions[j]));
        }
    }
    return m;
}

} // namespace scs
