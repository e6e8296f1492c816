#include "dgw/suites.hpp"

#include <chrono>
#include <random>

#include "dgw/families.hpp"
#include "dgw/graph_io.hpp"
#include "dgw/pursuit/measure.hpp"

namespace dgw {

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Graph random_instance(std::mt19937_64& rng, int min_v, int max_v) {
    const int v = min_v + static_cast<int>(rng() % static_cast<std::uint64_t>(max_v - min_v + 1));
    const double p = 0.15 + 0.7 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return gen_random_digraph(v, p, rng());
}

void record(SuiteResult& r, bool pass, const Graph& g, const std::string& detail) {
    ++r.cases;
    if (pass)
        ++r.passed;
    else
        r.failures.push_back(detail + " graph=" + serialize_graph(g));
}

std::string value_text(const MeasureResult& m) {
    return m.value ? std::to_string(*m.value) : std::string("budget");
}

}  // namespace

SuiteResult width_gap_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "width-gap";
    Stopwatch clock;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Graph g = random_instance(rng, 1, 6);
        const auto dpw = measure(g, Variant::DPW);
        const auto dagw = measure(g, Variant::DAGW);
        const auto kw = measure(g, Variant::KW);
        const bool pass = dpw.value && dagw.value && kw.value && *dagw.value <= *dpw.value + 1 &&
                          *kw.value <= *dpw.value + 1;
        record(r, pass, g,
               "dpw=" + value_text(dpw) + " dagw=" + value_text(dagw) + " kw=" + value_text(kw));
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult ent_one_suite(std::uint64_t seed, int random_count) {
    SuiteResult r;
    r.name = "ent-one";
    Stopwatch clock;
    auto check = [&](const Graph& g) {
        const bool zero = solve_entanglement(g, 0).cops_win();
        const bool one = !zero && solve_entanglement(g, 1).cops_win();
        const bool predicted = entanglement_is_one(g);
        record(r, predicted == one, g,
               std::string("characterisation=") + (predicted ? "1" : "not 1") + " solver=" + (one ? "1" : "not 1"));
    };
    for (int v = 1; v <= 4; ++v) {
        const std::uint64_t codes = std::uint64_t{1} << (v * v);
        for (std::uint64_t code = 0; code < codes; ++code) check(digraph_from_code(v, code));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) check(random_instance(rng, 5, 6));
    r.seconds = clock.seconds();
    return r;
}

SuiteResult acyclic_ent_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "acyclic-ent";
    Stopwatch clock;
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5ULL);
    for (int i = 0; i < count; ++i) {
        const int v = 1 + static_cast<int>(rng() % 10);
        const double p = 0.15 + 0.7 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const Graph g = gen_random_dag(v, p, rng());
        const auto ent = measure(g, Variant::ENT);
        record(r, ent.value == 0, g, "ent=" + value_text(ent));
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult normalization_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "normalization";
    Stopwatch clock;
    std::mt19937_64 rng(seed ^ 0x5a5a5a5aULL);
    for (int i = 0; i < count; ++i) {
        const Graph g = random_instance(rng, 1, 5);
        std::string mismatch;
        for (Variant variant : {Variant::TW, Variant::DAGW})
            for (bool monotone : {true, false})
                for (int k = 0; k <= static_cast<int>(g.vertex_count()); ++k) {
                    const GameConfig cfg{variant, k, monotone};
                    const bool normalised = solve_visible(g, cfg).cops_win();
                    const bool full = solve_visible_full_moves(g, cfg) == Winner::Cops;
                    if (normalised != full && mismatch.empty())
                        mismatch = variant_name(variant) + " k=" + std::to_string(k) +
                                   (monotone ? " monotone" : " non-monotone") + " normalised=" +
                                   (normalised ? "cops" : "robber") + " full=" + (full ? "cops" : "robber");
                }
        record(r, mismatch.empty(), g, mismatch);
    }
    r.seconds = clock.seconds();
    return r;
}

std::vector<SuiteResult> run_property_suites(std::uint64_t seed) {
    return {width_gap_suite(seed), ent_one_suite(seed), acyclic_ent_suite(seed), normalization_suite(seed)};
}

}  // namespace dgw
