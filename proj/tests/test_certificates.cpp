#include <doctest.h>

#include "dgw/families.hpp"
#include "dgw/pursuit/measure.hpp"

using namespace dgw;

TEST_SUITE("certificates") {

TEST_CASE("sweep uses single-cop moves within budget") {
    for (int n = 1; n <= 4; ++n) {
        const SweepCertificate cert = dpw_sweep_certificate_switch_all(n);
        CHECK(cert.budget == 4);
        std::size_t prev = 0;
        VertexSet before(gen_switch_all(n).vertex_count());
        for (const VertexSet& c : cert.placements) {
            CHECK(c.size() <= 4);
            const std::size_t changed = (c - before).size() + (before - c).size();
            CHECK(changed == 1);
            prev = c.size();
            before = c;
        }
        CHECK(prev >= 1);
    }
}

TEST_CASE("sweep opens on r, s, e1 and ends on c") {
    const Graph g = gen_switch_all(1);
    const SweepCertificate cert = dpw_sweep_certificate_switch_all(1);
    REQUIRE(cert.placements.size() >= 3);
    CHECK(cert.placements[0] == g.make_set({"r"}));
    CHECK(cert.placements[1] == g.make_set({"r", "s"}));
    CHECK(cert.placements[2] == g.make_set({"r", "s", "e1"}));
    CHECK(cert.placements.back() == g.make_set({"r", "s", "c"}));
}

TEST_CASE("sweep clears monotonically under both semantics") {
    for (int n = 1; n <= 8; ++n)
        for (Variant v : {Variant::DPW, Variant::KW}) {
            const SweepReport r = verify_sweep(gen_switch_all(n), dpw_sweep_certificate_switch_all(n), v);
            CAPTURE(n);
            CHECK(r.cleared);
            CHECK(r.monotone);
        }
}

TEST_CASE("sweep needs r and s guarded") {
    const Graph g = gen_switch_all(2);
    SweepCertificate cert = dpw_sweep_certificate_switch_all(2);
    const Vertex r = g.id("r");
    for (auto& c : cert.placements) c.erase(r);
    CHECK_FALSE(verify_sweep(g, cert, Variant::DPW).ok(true));
}

TEST_CASE("exact solvers confirm four cops at n=1") {
    const Graph g = gen_switch_all(1);
    CHECK(solve_invisible(g, GameConfig{Variant::DPW, 4}).cops_win());
    CHECK(solve_invisible(g, GameConfig{Variant::KW, 4}).cops_win());
    CHECK(solve_visible(g, GameConfig{Variant::DAGW, 4}).cops_win());
}

TEST_CASE("entanglement strategy") {
    for (int n = 1; n <= 4; ++n) {
        const StrategyCheck c = verify_ent_strategy(gen_switch_all(n), ent_strategy_switch_all(n), 3);
        CAPTURE(n);
        CHECK_MESSAGE(c.ok, c.failure);
    }
    // Two cops cannot follow it.
    CHECK_FALSE(verify_ent_strategy(gen_switch_all(2), ent_strategy_switch_all(2), 2).ok);
}

}  // TEST_SUITE
