#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "scs/diversity.hpp"
#include "scs/element_set.hpp"
#include "scs/rng.hpp"

using namespace scs;

namespace {

ElementSet random_set(Rng& rng, std::uint64_t universe, std::size_t max_len) {
    std::vector<std::uint64_t> ids;
    const std::size_t len = 1 + rng.index(max_len);
    for (std::size_t i = 0; i < len; ++i) ids.push_back(rng.below(universe));
    return ElementSet(std::move(ids));
}

// Naive greedy elimination: recompute the diversity of every candidate
// remainder from scratch, remove the argmax, lowest index on ties.
std::vector<int> naive_greedy_eliminate(const DissimilarityMatrix& m, std::vector<int> subset,
                                        std::size_t k, const SolowPolaskyConfig& cfg) {
    std::sort(subset.begin(), subset.end());
    while (subset.size() > k) {
        const double tol = diversity_tolerance(subset.size());
        std::vector<double> value(subset.size());
        double best = -1e300;
        for (std::size_t a = 0; a < subset.size(); ++a) {
            std::vector<int> rest;
            for (std::size_t b = 0; b < subset.size(); ++b) {
                if (b != a) rest.push_back(subset[b]);
            }
            value[a] = solow_polasky(m, rest, cfg);
            best = std::max(best, value[a]);
        }
        std::size_t pick = 0;
        while (value[pick] < best - tol) ++pick;
        subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return subset;
}

DissimilarityMatrix random_distance_matrix(Rng& rng, std::size_t n) {
    DissimilarityMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m.set(i, j, 0.05 + 0.95 * rng.real01()); // bounded away from zero
        }
    }
    return m;
}

} // namespace

TEST_CASE("jaccard distance on small sets", "[diversity]") {
    CHECK(jaccard_distance(ElementSet{1, 2, 3}, ElementSet{2, 3, 4}) == Approx(0.5));
    CHECK(jaccard_distance(ElementSet{7}, ElementSet{7}) == 0.0);
    CHECK(jaccard_distance(ElementSet{1}, ElementSet{2}) == 1.0);
    CHECK(jaccard_distance(ElementSet{}, ElementSet{}) == 0.0);
}

TEST_CASE("jaccard distance is a metric on random triples", "[diversity]") {
    Rng rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        const ElementSet a = random_set(rng, 12, 6);
        const ElementSet b = random_set(rng, 12, 6);
        const ElementSet c = random_set(rng, 12, 6);
        const double ab = jaccard_distance(a, b);
        const double bc = jaccard_distance(b, c);
        const double ac = jaccard_distance(a, c);
        CHECK(ab == Approx(jaccard_distance(b, a)));
        CHECK(ac <= ab + bc + 1e-12);
        CHECK((a == b) == (ab == 0.0));
    }
}

TEST_CASE("pairwise matrix matches hand-computed entries", "[diversity]") {
    SECTION("duplicates") {
        const auto m = pairwise_matrix({ElementSet{1}, ElementSet{1}});
        CHECK(m.at(0, 1) == 0.0);
        CHECK(m.at(1, 0) == 0.0);
    }
    SECTION("disjoint") {
        const auto m = pairwise_matrix({ElementSet{1}, ElementSet{2}});
        CHECK(m.at(0, 1) == 1.0);
    }
    SECTION("chain of overlapping sets") {
        const auto m = pairwise_matrix({ElementSet{1, 2}, ElementSet{2, 3}, ElementSet{3, 4}});
        CHECK(m.at(0, 1) == Approx(2.0 / 3.0));
        CHECK(m.at(1, 2) == Approx(2.0 / 3.0));
        CHECK(m.at(0, 2) == 1.0);
    }
    SECTION("empty input rejected") {
        CHECK_THROWS_AS(pairwise_matrix({}), Error);
    }
    SECTION("symmetric, zero diagonal, entries in range") {
        Rng rng(7);
        std::vector<ElementSet> sols;
        for (int i = 0; i < 20; ++i) sols.push_back(random_set(rng, 30, 10));
        const auto m = pairwise_matrix(sols);
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(m.at(i, i) == 0.0);
            for (std::size_t j = 0; j < m.size(); ++j) {
                CHECK(m.at(i, j) == m.at(j, i));
                CHECK(m.at(i, j) >= 0.0);
                CHECK(m.at(i, j) <= 1.0);
            }
        }
    }
}

TEST_CASE("minimum and average subset distances", "[diversity]") {
    DissimilarityMatrix two(2);
    two.set(0, 1, 0.2);
    CHECK(d_min(two, {0, 1}) == Approx(0.2));
    CHECK(d_avg(two, {0, 1}) == Approx(0.2));

    const auto chain = pairwise_matrix({ElementSet{1, 2}, ElementSet{2, 3}, ElementSet{3, 4}});
    CHECK(d_min(chain, {0, 1, 2}) == Approx(2.0 / 3.0));
    CHECK(d_avg(chain, {0, 1, 2}) == Approx(7.0 / 9.0));

    const auto dup = pairwise_matrix({ElementSet{1}, ElementSet{1}, ElementSet{2}});
    CHECK(d_min(dup, {0, 1, 2}) == 0.0);
    CHECK(d_avg(dup, {0, 1}) == 0.0);

    CHECK_THROWS_AS(d_min(two, {0}), Error);
    CHECK_THROWS_AS(d_avg(two, {1}), Error);
}

TEST_CASE("solow-polasky closed forms", "[diversity]") {
    DissimilarityMatrix one(1);
    CHECK(solow_polasky(one, {0}, {1.0}) == 1.0);

    SECTION("two solutions") {
        DissimilarityMatrix m(2);
        m.set(0, 1, 1.0);
        const double beta = std::log(2.0);
        CHECK(solow_polasky(m, {0, 1}, {beta}) == Approx(4.0 / 3.0).epsilon(1e-12));
        for (const double b : {0.1, 1.0, 10.0}) {
            for (const double d : {0.1, 0.5, 1.0}) {
                DissimilarityMatrix mm(2);
                mm.set(0, 1, d);
                const double expected = 2.0 / (1.0 + std::exp(-b * d));
                CHECK(solow_polasky(mm, {0, 1}, {b}) == Approx(expected).epsilon(1e-12));
            }
        }
    }

    SECTION("equidistant solutions") {
        for (const std::size_t n : {3u, 5u, 8u}) {
            for (const double b : {0.1, 1.0, 10.0}) {
                for (const double d : {0.1, 0.5, 1.0}) {
                    DissimilarityMatrix m(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, d);
                    }
                    std::vector<int> all;
                    for (std::size_t i = 0; i < n; ++i) all.push_back(static_cast<int>(i));
                    const double q = std::exp(-b * d);
                    const double expected = static_cast<double>(n) / (1.0 + (n - 1) * q);
                    CHECK(solow_polasky(m, all, {b}) == Approx(expected).epsilon(1e-10));
                }
            }
        }
    }

    SECTION("duplicate solutions rejected") {
        DissimilarityMatrix m(3);
        m.set(0, 1, 0.0);
        m.set(0, 2, 0.5);
        m.set(1, 2, 0.5);
        CHECK_THROWS_AS(solow_polasky(m, {0, 1, 2}, {1.0}), Error);
    }
}

TEST_CASE("solow-polasky stays within [1, n] and ignores index order", "[diversity]") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ElementSet> sols;
        for (int i = 0; i < 8; ++i) sols.push_back(random_set(rng, 40, 12));
        // deduplicate so the kernel stays invertible
        std::vector<ElementSet> uniq;
        for (const auto& s : sols) {
            if (std::find(uniq.begin(), uniq.end(), s) == uniq.end()) uniq.push_back(s);
        }
        if (uniq.size() < 2) continue;
        const auto m = pairwise_matrix(uniq);
        std::vector<int> subset;
        for (std::size_t i = 0; i < uniq.size(); ++i) subset.push_back(static_cast<int>(i));
        const double v = solow_polasky(m, subset, {2.0});
        CHECK(v >= 1.0 - 1e-9);
        CHECK(v <= static_cast<double>(subset.size()) + 1e-9);

        std::vector<int> shuffled = subset;
        rng.shuffle(shuffled);
        CHECK(solow_polasky(m, shuffled, {2.0}) == Approx(v).epsilon(1e-9));
    }
}

TEST_CASE("greedy elimination keeps the far pair", "[diversity]") {
    DissimilarityMatrix m(3);
    m.set(0, 1, 0.1);
    m.set(0, 2, 0.9);
    m.set(1, 2, 0.9);
    const auto kept = greedy_sp_eliminate(m, {0, 1, 2}, 2, {1.0});
    REQUIRE(kept.size() == 2);
    CHECK(kept[1] == 2); // the far solution survives with one of the close pair
}

TEST_CASE("greedy elimination leaves a full-size subset unchanged", "[diversity]") {
    Rng rng(3);
    const auto m = random_distance_matrix(rng, 6);
    const std::vector<int> subset{0, 1, 2, 3, 4, 5};
    CHECK(greedy_sp_eliminate(m, subset, 6, {1.0}) == subset);
}

TEST_CASE("incremental elimination equals naive recomputation", "[diversity]") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + rng.index(9); // up to 12
        const auto m = random_distance_matrix(rng, n);
        std::vector<int> subset;
        for (std::size_t i = 0; i < n; ++i) subset.push_back(static_cast<int>(i));
        const std::size_t k = 1 + rng.index(n - 1);
        const SolowPolaskyConfig cfg{5.0};
        CHECK(greedy_sp_eliminate(m, subset, k, cfg) == naive_greedy_eliminate(m, subset, k, cfg));
    }
}

TEST_CASE("two-point diversity matches the closed form tightly", "[diversity]") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const double d = 0.01 + 0.99 * rng.real01();
        const double beta = 0.05 + 5.0 * rng.real01();
        DissimilarityMatrix m(2);
        m.set(0, 1, d);
        const double expected = 2.0 / (1.0 + std::exp(-beta * d));
        const double got = solow_polasky(m, {0, 1}, {beta});
        CHECK(std::abs(got - expected) <= 1e-12 * expected);
    }
}
