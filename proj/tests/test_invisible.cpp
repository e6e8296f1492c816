#include <doctest.h>

#include <random>

#include "dgw/errors.hpp"
#include "dgw/families.hpp"
#include "dgw/pursuit/measure.hpp"
#include "oracles.hpp"

using namespace dgw;

namespace {

bool cops_win(const Graph& g, Variant v, int k, bool monotone = true) {
    return solve_invisible(g, GameConfig{v, k, monotone}).cops_win();
}

}  // namespace

TEST_SUITE("invisible") {

TEST_CASE("single vertex with self-loop") {
    const Graph g({"v"}, {{0, 0}});
    CHECK(cops_win(g, Variant::KW, 1));
    CHECK_FALSE(cops_win(g, Variant::KW, 0));
}

TEST_CASE("two-cycle by hand") {
    // a <-> b, update formulas stepped through by hand.
    const Graph g({"a", "b"}, {{0, 1}, {1, 0}});
    const VertexSet none(2), a(2, {0}), b(2, {1}), ab(2, {0, 1}), all = g.all_vertices();
    CHECK(advance_robber_space(g, Variant::KW, none, a, all) == b);
    CHECK(advance_robber_space(g, Variant::KW, a, none, b) == b);
    CHECK(advance_robber_space(g, Variant::KW, a, ab, b) == none);
    CHECK(advance_robber_space(g, Variant::DPW, a, none, b) == ab);
    CHECK(advance_robber_space(g, Variant::DPW, a, ab, b) == none);
    // Inert robber on b: placing a cop on b flushes it to a.
    CHECK(advance_robber_space(g, Variant::KW, none, b, ab) == a);
    CHECK_FALSE(cops_win(g, Variant::KW, 1));
    CHECK(cops_win(g, Variant::KW, 2));
    CHECK(measure(g, Variant::KW).value == 2);
    CHECK(measure(g, Variant::DPW).value == 1);
}

TEST_CASE("DAGs have directed pathwidth zero") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_random_dag(7, 0.4, seed);
        CHECK(cops_win(g, Variant::DPW, 1));
        CHECK(measure(g, Variant::DPW).value == 0);
    }
}

TEST_CASE("agrees with the naive oracle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = gen_random_digraph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng());
        for (int k = 0; k <= n; ++k)
            for (bool monotone : {true, false}) {
                CAPTURE(i);
                CAPTURE(k);
                CHECK(cops_win(g, Variant::KW, k, monotone) == oracle::invisible_cops_win(g, k, true, monotone));
                CHECK(cops_win(g, Variant::DPW, k, monotone) == oracle::invisible_cops_win(g, k, false, monotone));
            }
    }
}

TEST_CASE("witness placements replay") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gen_random_digraph(2 + static_cast<int>(rng() % 5), 0.35, rng());
        for (Variant v : {Variant::KW, Variant::DPW}) {
            const int k = measure(g, v).cops_needed;
            const SolveOutcome out = solve_invisible(g, GameConfig{v, k, true});
            REQUIRE(out.cops_win());
            REQUIRE(out.placements.has_value());
            const SweepReport r = verify_sweep(g, SweepCertificate{k, *out.placements}, v);
            CHECK(r.ok(true));
        }
    }
}

TEST_CASE("sweep verifier detects problems") {
    const Graph g({"a", "b"}, {{0, 1}, {1, 0}});
    const VertexSet a(2, {0}), b(2, {1}), ab(2, {0, 1}), none(2);
    // Jumping the single cop from a to b lets the robber back into a.
    SweepReport r = verify_sweep(g, SweepCertificate{1, {a, none, b, none}}, Variant::DPW);
    CHECK_FALSE(r.cleared);
    CHECK_FALSE(r.monotone);
    CHECK(r.first_violation == 1u);
    r = verify_sweep(g, SweepCertificate{2, {a, ab}}, Variant::DPW);
    CHECK(r.ok(true));
    CHECK(r.steps == 2);
    CHECK_FALSE(verify_sweep(g, SweepCertificate{2, {}}, Variant::KW).cleared);
    CHECK(verify_sweep(Graph({"v"}, {{0, 0}}), SweepCertificate{1, {VertexSet(1, {0})}}, Variant::KW).ok(true));
    CHECK_THROWS_AS(verify_sweep(g, SweepCertificate{1, {ab}}, Variant::DPW), InputError);
    CHECK_THROWS_AS(verify_sweep(g, SweepCertificate{1, {VertexSet(3, {0})}}, Variant::DPW), InputError);
    CHECK_THROWS_AS(verify_sweep(g, SweepCertificate{1, {a}}, Variant::TW), InputError);
}

TEST_CASE("budget exhaustion is reported") {
    const SolveOutcome out = solve_invisible(gen_switch_all(1), GameConfig{Variant::KW, 3}, SolverLimits{50});
    CHECK(out.budget_exhausted());
}

}  // TEST_SUITE
