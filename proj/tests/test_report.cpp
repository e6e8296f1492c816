#include <doctest.h>

#include "dgw/report.hpp"
#include "dgw/suites.hpp"

using namespace dgw;

namespace {

const ReportEntry* find(const MeasureReport& r, const std::string& measure, Provenance p) {
    for (const auto& e : r.entries)
        if (e.measure == measure && e.provenance == p) return &e;
    return nullptr;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("switch-all report") {
    const MeasureReport r = run_report(Family::SwitchAll, 1, 6);
    CHECK(r.all_verified());
    const ReportEntry* dpw = find(r, "dpw", Provenance::Certificate);
    REQUIRE(dpw);
    CHECK(dpw->claimed_bound == 3);
    CHECK(dpw->verified);
    CHECK(dpw->n == 6);
    const ReportEntry* cw = find(r, "cw", Provenance::CwExpression);
    REQUIRE(cw);
    CHECK(cw->claimed_bound == 10);
    CHECK(cw->value == 10);
    const ReportEntry* dagw = find(r, "dagw", Provenance::Certificate);
    REQUIRE(dagw);
    CHECK(dagw->note.find("not a DAGW replay") != std::string::npos);
    REQUIRE(find(r, "tw", Provenance::WitnessSubgraph));
    for (const auto& e : r.entries) {
        CAPTURE(e.measure);
        CHECK(e.seconds >= 0.0);
        if (e.provenance != Provenance::NotChecked && e.claimed_bound && e.value)
            CHECK(*e.value <= *e.claimed_bound);
    }
}

TEST_CASE("zadeh report") {
    const MeasureReport r = run_report(Family::Zadeh, 0, 4);
    CHECK(r.all_verified());
    const ReportEntry* cw = find(r, "cw", Provenance::CwExpression);
    REQUIRE(cw);
    CHECK(cw->claimed_bound == 9);
    CHECK(cw->value == 9);
    const ReportEntry* clique = find(r, "tw", Provenance::WitnessSubgraph);
    REQUIRE(clique);
    CHECK(clique->verified);
    CHECK_FALSE(clique->claimed_bound.has_value());
}

TEST_CASE("budget exhaustion downgrades the entry") {
    const MeasureReport r = run_report(Family::SwitchAll, 1, 1, SolverLimits{200});
    const ReportEntry* kw = nullptr;
    for (const auto& e : r.entries)
        if (e.measure == "kw" && e.n == 1 && e.provenance != Provenance::Certificate) kw = &e;
    REQUIRE(kw);
    CHECK(kw->provenance == Provenance::NotChecked);
    CHECK_FALSE(kw->value.has_value());
    CHECK(r.all_verified());
}

TEST_CASE("json schema") {
    const MeasureReport r = run_report(Family::SwitchAll, 0, 2);
    const auto j = to_json(r);
    CHECK(j["family"] == "switch-all");
    CHECK(j["n_cert"] == 2);
    REQUIRE(j["entries"].is_array());
    for (const auto& e : j["entries"]) {
        for (const char* key : {"measure", "n", "claimed_bound", "provenance", "value", "verified", "seconds", "note"})
            CHECK(e.contains(key));
        CHECK(e["n"].is_number_integer());
        CHECK(e["seconds"].is_number_float());
        CHECK((e["value"].is_null() || e["value"].is_number_integer()));
    }
    REQUIRE(j["not_checked_rows"].size() == 5);
    CHECK(j["not_checked_rows"][0]["rule"] == "switch-best");
    CHECK(j["not_checked_rows"][0]["cw"] == 18);
    CHECK(j["not_checked_rows"][4]["rule"] == "snare");
    CHECK(j["not_checked_rows"][4]["cw"] == "unknown");
    CHECK(j["not_checked_rows"][4]["tw"].is_null());
    CHECK(j["all_verified"] == true);
}

TEST_CASE("report content is deterministic") {
    auto strip = [](nlohmann::ordered_json j) {
        for (auto& e : j["entries"]) e.erase("seconds");
        return j;
    };
    CHECK(strip(to_json(run_report(Family::SwitchAll, 1, 3))) == strip(to_json(run_report(Family::SwitchAll, 1, 3))));
}

TEST_CASE("bad arguments") {
    CHECK_THROWS(run_report(Family::DirectedCycle, 1, 1));
    CHECK_THROWS(run_report(Family::SwitchAll, -1, 1));
}

}  // TEST_SUITE

TEST_SUITE("suites") {

TEST_CASE("property suites pass for a few seeds") {
    for (std::uint64_t seed : {kDefaultSuiteSeed, std::uint64_t{1}, std::uint64_t{99}}) {
        CAPTURE(seed);
        CHECK(width_gap_suite(seed, 60).ok());
        CHECK(acyclic_ent_suite(seed, 30).ok());
        CHECK(normalization_suite(seed, 30).ok());
    }
}

TEST_CASE("default sizes") {
    const auto all = run_property_suites(kDefaultSuiteSeed);
    REQUIRE(all.size() == 4);
    CHECK(all[0].cases == 200);
    CHECK(all[1].cases == 2 + 16 + 512 + 65536 + 100);
    CHECK(all[2].cases == 50);
    CHECK(all[3].cases == 100);
    for (const auto& s : all) {
        CAPTURE(s.name);
        CHECK(s.ok());
        CHECK(s.failures.empty());
    }
}

}  // TEST_SUITE
