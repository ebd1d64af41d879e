#include <catch2/catch.hpp>

#include <vector>

#include "scs/baselines.hpp"
#include "scs/instance_gen.hpp"
#include "scs/rng.hpp"
#include "test_util.hpp"

using namespace scs;

TEST_CASE("msls keeps distinct solutions in arrival order", "[baselines]") {
    SECTION("unique local optimum exhausts the cap with one solution") {
        // Detour instance: every descent ends at the same path.
        auto g = WeightedGraph::build(3, 0, 2, {{0, 2, 10.0}, {0, 1, 1.0}, {1, 2, 1.0}});
        const auto ctx = build_sp_context(std::move(g), 1.1);
        int runs = 0;
        const auto out = msls<Path>(
            [&](long iter) {
                ++runs;
                Rng rng(derive_seed(1, static_cast<std::uint64_t>(iter)));
                return sp_local_search(ctx, rng);
            },
            [](const Path& p) { return path_edge_set(p); }, BaselineBudget{3, 10});
        CHECK(out.size() == 1);
        CHECK(runs == 10);
    }
    SECTION("target one returns the first sample") {
        int calls = 0;
        const auto out = msls<int>(
            [&](long) {
                ++calls;
                return 7;
            },
            [](int v) { return ElementSet{static_cast<std::uint64_t>(v)}; }, BaselineBudget{1, 100});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == 7);
        CHECK(calls == 1);
    }
    SECTION("duplicates never appear") {
        const auto out = msls<int>([&](long iter) { return static_cast<int>(iter % 3); },
                                   [](int v) { return ElementSet{static_cast<std::uint64_t>(v)}; },
                                   BaselineBudget{5, 50});
        CHECK(out == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("yen on a triangle", "[baselines]") {
    auto g = WeightedGraph::build(3, 0, 2, {{0, 2, 1.0}, {0, 1, 1.0}, {1, 2, 1.0}});
    SECTION("two best paths in order") {
        const auto out = yen_k_shortest(g, BaselineBudget{2, 100});
        REQUIRE(out.size() == 2);
        CHECK(out[0] == Path{0, 2});
        CHECK(out[1] == Path{0, 1, 2});
    }
    SECTION("first path is the shortest path") {
        const auto out = yen_k_shortest(g, BaselineBudget{1, 100});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Path{0, 2});
        CHECK(path_length(out[0], g) == floyd_warshall(g).dist(0, 2));
    }
}

TEST_CASE("yen matches brute-force enumeration on random graphs", "[baselines]") {
    Rng rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = testutil::random_connected_graph(rng, 8, 0.8);
        const auto expected = testutil::all_simple_paths_sorted(g);
        const int k = 5;
        const auto got = yen_k_shortest(g, BaselineBudget{k, 100000});
        const std::size_t want = std::min<std::size_t>(k, expected.size());
        REQUIRE(got.size() == want);
        for (std::size_t i = 0; i < want; ++i) {
            CHECK(got[i] == expected[i]);
        }
        // nondecreasing weights, simple, distinct
        for (std::size_t i = 0; i + 1 < got.size(); ++i) {
            CHECK(path_length(got[i], g) <= path_length(got[i + 1], g));
        }
        for (const auto& p : got) {
            CHECK(is_simple_path(p));
            CHECK(uses_only_graph_edges(p, g));
        }
    }
}

TEST_CASE("yen enumerates everything when asked for more than exists", "[baselines]") {
    Rng rng(159);
    const auto g = testutil::random_connected_graph(rng, 7, 0.6);
    const auto expected = testutil::all_simple_paths_sorted(g);
    const auto got = yen_k_shortest(g, BaselineBudget{100000 - 1, 100000});
    REQUIRE(got.size() == expected.size());
    CHECK(got == expected);
}

TEST_CASE("yen-ls filters paths that are not local optima", "[baselines]") {
    // Second-shortest path [0,2] has the improving insertion of vertex 1.
    auto g = WeightedGraph::build(3, 0, 2, {{0, 2, 10.0}, {0, 1, 1.0}, {1, 2, 1.0}});
    const auto ctx = build_sp_context(g, 1.1);

    SECTION("non-optimal path skipped") {
        const auto out = yen_ls(ctx, BaselineBudget{2, 100});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Path{0, 1, 2});
    }
    SECTION("the shortest path is always retained") {
        Rng rng(4);
        for (int trial = 0; trial < 10; ++trial) {
            const auto rg = testutil::random_connected_graph(rng, 9, 0.7);
            const auto rctx = build_sp_context(rg, 1.1);
            const auto out = yen_ls(rctx, BaselineBudget{1, 100000});
            REQUIRE(out.size() == 1);
            CHECK(out[0] == yen_k_shortest(rg, BaselineBudget{1, 100000})[0]);
            CHECK_FALSE(has_improving_sp_move(out[0], rctx.relaxed));
        }
    }
    SECTION("short output when the cap bites first") {
        const auto out = yen_ls(ctx, BaselineBudget{2, 2});
        CHECK(out.size() == 1); // cap of 2 generated paths, only one locally optimal
    }
    SECTION("transform mode descends to distinct local optima") {
        Rng rng(8);
        const auto out = yen_ls(ctx, BaselineBudget{2, 100}, YenLsMode::TransformThenDedup, &rng);
        REQUIRE(out.size() == 1); // both Yen paths land on the same optimum
        CHECK(out[0] == Path{0, 1, 2});
    }
}

TEST_CASE("yen-ls output is an order-preserving subset of yen output", "[baselines]") {
    Rng rng(655);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testutil::random_connected_graph(rng, 8, 0.8);
        const auto ctx = build_sp_context(g, 1.1);
        const auto filtered = yen_ls(ctx, BaselineBudget{4, 200});
        const auto full = yen_k_shortest(g, BaselineBudget{199, 200});
        std::size_t cursor = 0;
        for (const auto& p : filtered) {
            bool found = false;
            while (cursor < full.size()) {
                if (full[cursor++] == p) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
            CHECK_FALSE(has_improving_sp_move(p, ctx.relaxed));
        }
    }
}
