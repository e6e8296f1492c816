#include <doctest.h>

#include <random>

#include "dgw/families.hpp"
#include "dgw/pursuit/measure.hpp"
#include "oracles.hpp"

using namespace dgw;

TEST_SUITE("measure") {

TEST_CASE("offsets") {
    CHECK(cop_offset(Variant::TW) == 1);
    CHECK(cop_offset(Variant::DPW) == 1);
    CHECK(cop_offset(Variant::DAGW) == 0);
    CHECK(cop_offset(Variant::KW) == 0);
    CHECK(cop_offset(Variant::ENT) == 0);
}

TEST_CASE("complete bipartite treewidth") {
    for (int k = 1; k <= 3; ++k) CHECK(measure(gen_complete_bipartite(k, k), Variant::TW).value == k);
    CHECK(measure(gen_complete_bipartite(2, 3), Variant::TW).value == 2);
}

TEST_CASE("edgeless graphs") {
    const Graph g({"a", "b"}, {});
    CHECK(measure(g, Variant::TW).value == 0);
    CHECK(measure(g, Variant::DPW).value == 0);
    CHECK(measure(g, Variant::DAGW).value == 1);
    CHECK(measure(g, Variant::KW).value == 1);
    CHECK(measure(g, Variant::ENT).value == 0);
    CHECK(measure(Graph(), Variant::DAGW).value == 0);
}

TEST_CASE("directed cycles") {
    for (int n = 2; n <= 6; ++n) {
        const Graph c = gen_directed_cycle(n);
        CHECK(measure(c, Variant::DAGW).value == 2);
        CHECK(measure(c, Variant::KW).value == 2);
        CHECK(measure(c, Variant::DPW).value == 1);
        CHECK(measure(c, Variant::ENT).value == 1);
        CHECK(measure(c, Variant::TW).value == (n == 2 ? 1 : 2));
    }
}

TEST_CASE("more cops never hurt") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = gen_random_digraph(n, 0.15 + 0.1 * static_cast<double>(rng() % 7), rng());
        for (Variant v : {Variant::TW, Variant::DAGW, Variant::KW, Variant::DPW, Variant::ENT})
            for (bool monotone : {true, false}) {
                bool won = false;
                for (int k = 0; k <= n; ++k) {
                    const bool now = solve(g, GameConfig{v, k, monotone}).cops_win();
                    CAPTURE(i);
                    CAPTURE(k);
                    CHECK((!won || now));
                    won = now;
                }
                CHECK(won);
            }
    }
}

TEST_CASE("solve dispatches on the variant") {
    const Graph c = gen_directed_cycle(3);
    for (Variant v : {Variant::TW, Variant::DAGW, Variant::KW, Variant::DPW, Variant::ENT}) {
        const MeasureResult m = measure(c, v);
        REQUIRE(m.value.has_value());
        CHECK(solve(c, GameConfig{v, m.cops_needed}).cops_win());
        if (m.cops_needed > 0) CHECK_FALSE(solve(c, GameConfig{v, m.cops_needed - 1}).cops_win());
    }
}

TEST_CASE("budget exhaustion is distinct from a value") {
    const MeasureResult m = measure(gen_switch_all(2), Variant::KW, true, SolverLimits{1000});
    CHECK(m.budget_exceeded());
    CHECK_FALSE(m.value.has_value());
}

TEST_CASE("variant names") {
    for (Variant v : {Variant::TW, Variant::DAGW, Variant::KW, Variant::DPW, Variant::ENT})
        CHECK(parse_variant(variant_name(v)) == v);
}

}  // TEST_SUITE
