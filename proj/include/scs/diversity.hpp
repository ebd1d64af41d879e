#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/rng.hpp"

namespace scs {

struct SolowPolaskyConfig {
    double beta = 2.0e-5;
};

// Absolute tolerance for comparing diversity values of an n-solution set.
inline double diversity_tolerance(std::size_t n) {
    return 1e-12 * static_cast<double>(n > 0 ? n : 1);
}

// Minimum off-diagonal dissimilarity over a subset of solutions.
inline double d_min(const DissimilarityMatrix& m, const std::vector<int>& subset) {
    if (subset.size() < 2) throw Error("undefined for fewer than two solutions");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            best = std::min(best, m.at(subset[a], subset[b]));
        }
    }
    return best;
}

// Mean of the C(|subset|, 2) unordered off-diagonal dissimilarities.
inline double d_avg(const DissimilarityMatrix& m, const std::vector<int>& subset) {
    if (subset.size() < 2) throw Error("undefined for fewer than two solutions");
    double sum = 0.0;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            sum += m.at(subset[a], subset[b]);
        }
    }
    const double pairs = 0.5 * static_cast<double>(subset.size()) *
                         static_cast<double>(subset.size() - 1);
    return sum / pairs;
}

namespace detail {

// Reciprocal condition threshold below which the exp(-beta d) matrix is
// treated as numerically singular (condition estimate beyond 1e10).
constexpr double kRcondFloor = 1e-10;

inline Eigen::MatrixXd exp_kernel(const DissimilarityMatrix& m, const std::vector<int>& subset,
                                  double beta) {
    const Eigen::Index n = static_cast<Eigen::Index>(subset.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double q = std::exp(-beta * m.at(subset[i], subset[j]));
            k(i, j) = q;
            k(j, i) = q;
        }
    }
    return k;
}

[[noreturn]] inline void throw_degenerate() {
    throw Error("degenerate diversity matrix — deduplicate solutions or increase beta");
}

} // namespace detail

// Solow-Polasky diversity of a solution subset: the sum of the entries of
// the inverse of the exp(-beta d) kernel, evaluated by solving one linear
// system with partial-pivoting LU rather than forming the inverse.
// Ranges from 1 (all identical) to |subset| (all infinitely far apart).
inline double solow_polasky(const DissimilarityMatrix& m, const std::vector<int>& subset,
                            const SolowPolaskyConfig& cfg = {}) {
    if (subset.empty()) throw Error("undefined for an empty subset");
    if (cfg.beta <= 0.0) throw Error("beta must be positive");
    if (subset.size() == 1) return 1.0;
    const Eigen::MatrixXd kernel = detail::exp_kernel(m, subset, cfg.beta);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(kernel);
    if (!(lu.rcond() > detail::kRcondFloor)) detail::throw_degenerate();
    const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(kernel.rows()));
    return x.sum();
}

// Maintains the inverse of the exp(-beta d) kernel over a shrinking subset,
// updating it by a rank-one block downdate per removal, so that the marginal
// diversity of removing any one member is an O(1) query and a full greedy
// elimination costs O(n^3) overall. Refactorizes from scratch whenever the
// running condition estimate exceeds 1/kRcondFloor.
class SolowPolaskyEliminator {
public:
    SolowPolaskyEliminator(const DissimilarityMatrix& m, std::vector<int> subset,
                           const SolowPolaskyConfig& cfg)
        : matrix_(&m), cfg_(cfg), indices_(std::move(subset)) {
        if (indices_.empty()) throw Error("undefined for an empty subset");
        if (cfg_.beta <= 0.0) throw Error("beta must be positive");
        kernel_ = detail::exp_kernel(m, indices_, cfg_.beta);
        refactorize();
    }

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }

    // Current Solow-Polasky diversity of the surviving subset.
    double diversity() const { return total_; }

    // Diversity of the surviving subset with member at position pos removed.
    double diversity_without(std::size_t pos) const {
        if (indices_.size() == 1) return 0.0; // empty remainder
        const double r = row_sums_[pos];
        const double mu = inverse_(pos, pos);
        if (mu == 0.0) detail::throw_degenerate();
        const double off = r - mu;
        return total_ - 2.0 * r + mu - off * off / mu;
    }

    // Removes the member at position pos, downdating the cached inverse.
    void remove(std::size_t pos) {
        const Eigen::Index n = kernel_.rows();
        if (n == 1) throw Error("cannot remove the last member");
        const double mu = inverse_(pos, pos);

        shrink(kernel_, pos);
        if (std::abs(mu) < 1e-300) {
            refactorize();
        } else {
            Eigen::VectorXd col(n - 1);
            Eigen::Index w = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i == static_cast<Eigen::Index>(pos)) continue;
                col(w++) = inverse_(i, pos);
            }
            shrink(inverse_, pos);
            inverse_.noalias() -= (col * col.transpose()) / mu;
            if (condition_estimate() > 1.0 / detail::kRcondFloor) refactorize();
        }
        indices_.erase(indices_.begin() + static_cast<std::ptrdiff_t>(pos));
        refresh_sums();
    }

private:
    static void shrink(Eigen::MatrixXd& m, std::size_t pos) {
        const Eigen::Index n = m.rows();
        const Eigen::Index p = static_cast<Eigen::Index>(pos);
        if (p < n - 1) {
            m.block(p, 0, n - 1 - p, n) = m.block(p + 1, 0, n - 1 - p, n);
            m.block(0, p, n - 1, n - 1 - p) = m.block(0, p + 1, n - 1, n - 1 - p);
        }
        m.conservativeResize(n - 1, n - 1);
    }

    double condition_estimate() const {
        const double na = kernel_.cwiseAbs().colwise().sum().maxCoeff();
        const double nm = inverse_.cwiseAbs().colwise().sum().maxCoeff();
        return na * nm;
    }

    void refactorize() {
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(kernel_);
        if (!(lu.rcond() > detail::kRcondFloor)) detail::throw_degenerate();
        inverse_ = lu.inverse();
        refresh_sums();
    }

    void refresh_sums() {
        row_sums_.assign(static_cast<std::size_t>(inverse_.rows()), 0.0);
        total_ = 0.0;
        for (Eigen::Index i = 0; i < inverse_.rows(); ++i) {
            const double r = inverse_.row(i).sum();
            row_sums_[static_cast<std::size_t>(i)] = r;
            total_ += r;
        }
    }

    const DissimilarityMatrix* matrix_;
    SolowPolaskyConfig cfg_;
    std::vector<int> indices_;
    Eigen::MatrixXd kernel_;
    Eigen::MatrixXd inverse_;
    std::vector<double> row_sums_;
    double total_ = 0.0;
};

// Greedy elimination: repeatedly removes the member whose removal leaves the
// remainder with the largest Solow-Polasky diversity, until k survive.
// Ties within diversity_tolerance are broken by the seeded rng when one is
// supplied, otherwise by lowest solution index.
inline std::vector<int> greedy_sp_eliminate(const DissimilarityMatrix& m, std::vector<int> subset,
                                            std::size_t k, const SolowPolaskyConfig& cfg = {},
                                            Rng* tie_rng = nullptr) {
    if (k == 0) throw Error("must keep at least one solution");
    if (k > subset.size()) throw Error("cannot keep more solutions than the subset holds");
    std::sort(subset.begin(), subset.end());
    if (k == subset.size()) return subset;
    SolowPolaskyEliminator state(m, subset, cfg);
    while (state.size() > k) {
        const double tol = diversity_tolerance(state.size());
        std::vector<double> value(state.size());
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t pos = 0; pos < state.size(); ++pos) {
            value[pos] = state.diversity_without(pos);
            best = std::max(best, value[pos]);
        }
        std::vector<std::size_t> tied;
        for (std::size_t pos = 0; pos < state.size(); ++pos) {
            if (value[pos] >= best - tol) tied.push_back(pos);
        }
        const std::size_t pick = (tie_rng && tied.size() > 1) ? tied[tie_rng->index(tied.size())]
                                                              : tied.front();
        state.remove(pick);
    }
    return state.indices();
}

} // namespace scs
