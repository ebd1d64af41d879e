#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace scs {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based fan-out of a master seed into independent per-run streams.
// Stream k of a given master seed is the same no matter how many other
// streams were drawn before it, so parallel runs stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream ^ 0x5851f42d4c957f2dULL));
}

// mt19937_64 wrapper with self-contained uniform draws.
// std::uniform_*_distribution output is implementation-defined, which would
// break byte-identical artifacts across standard libraries; the rejection
// sampling below depends only on the (fully specified) engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    // Uniform in [0, 1), 53-bit resolution.
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi].
    double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// Lazily shuffled scan over {0, 1, ..., n-1}: a Fisher-Yates permutation
// materialized only as far as the caller consumes it, so a first-improvement
// search that accepts early pays for the prefix it looked at.
class ShuffledScan {
public:
    ShuffledScan(std::size_t n, Rng& rng) : rng_(rng), order_(n), pos_(0) {
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    }

    bool next(std::size_t& out) {
        if (pos_ >= order_.size()) return false;
        const std::size_t j = pos_ + rng_.index(order_.size() - pos_);
        std::swap(order_[pos_], order_[j]);
        out = order_[pos_++];
        return true;
    }

private:
    Rng& rng_;
    std::vector<std::size_t> order_;
    std::size_t pos_;
};

} // namespace scs
