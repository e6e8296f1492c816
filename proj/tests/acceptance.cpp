// Acceptance suite: one PASS/FAIL line per criterion, each with its wall
// clock limit. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "dgw/cliquewidth.hpp"
#include "dgw/families.hpp"
#include "dgw/pursuit/measure.hpp"
#include "dgw/report.hpp"
#include "dgw/suites.hpp"
#include "oracles.hpp"

using namespace dgw;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > limit_seconds) {
        v.ok = false;
        v.detail = "over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                v.detail.empty() ? "" : ": ", v.detail.c_str());
    std::fflush(stdout);
}

std::string suite_detail(const SuiteResult& r) {
    return r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.cases) +
           (r.failures.empty() ? std::string() : ", first failure " + r.failures.front());
}

}  // namespace

int main() {
    criterion(1, "generators", 5, [](Verdict& v) {
        for (int n = 1; n <= 16; ++n)
            v.require(gen_switch_all(n).vertex_count() == static_cast<std::size_t>(10 * n + 4),
                      "switch-all vertex count at n=" + std::to_string(n));
        const Graph g1 = gen_switch_all(1);
        v.require(g1.edge_count() == 27, "switch-all n=1 edge count");
        v.require(oracle::named_edges(g1) == oracle::switch_all_g1_edges(), "switch-all n=1 edge table");
        for (int n = 1; n <= 16; ++n) {
            const Graph z = gen_zadeh(n);
            v.require(z.vertex_count() == static_cast<std::size_t>(13 * n + 3),
                      "zadeh vertex count at n=" + std::to_string(n));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    v.require(z.has_edge(z.id("k" + std::to_string(i)), z.id("k" + std::to_string(j))) == (i != j),
                              "zadeh clique at n=" + std::to_string(n));
        }
    });

    criterion(2, "treewidth unbounded on switch-all", 30, [](Verdict& v) {
        for (int k = 1; k <= 3; ++k) {
            const BipartiteWitness w = switch_all_bipartite_witness(k);
            v.require(w.n == (k + 1) / 2 + k - 1, "witness parameter for k=" + std::to_string(k));
            v.require(check_bipartite_witness(symmetric_closure(gen_switch_all(w.n)), w.a, w.b),
                      "K_{k,k} witness for k=" + std::to_string(k));
        }
        for (int k = 2; k <= 3; ++k)
            v.require(measure(gen_complete_bipartite(k, k), Variant::TW).value == k,
                      "tw(K_{k,k}) for k=" + std::to_string(k));
    });

    criterion(3, "dpw <= 3 sweep certificate", 60, [](Verdict& v) {
        for (int n = 1; n <= 8; ++n) {
            const SweepCertificate cert = dpw_sweep_certificate_switch_all(n);
            v.require(cert.budget == 4, "certificate budget");
            const SweepReport r = verify_sweep(gen_switch_all(n), cert, Variant::DPW);
            v.require(r.cleared && r.monotone, "DPW replay at n=" + std::to_string(n));
        }
        v.require(solve_invisible(gen_switch_all(1), GameConfig{Variant::DPW, 4, true}).cops_win(),
                  "exact DPW with 4 cops at n=1");
    });

    criterion(4, "kw <= 4 sweep certificate", 60, [](Verdict& v) {
        for (int n = 1; n <= 8; ++n) {
            const SweepReport r = verify_sweep(gen_switch_all(n), dpw_sweep_certificate_switch_all(n), Variant::KW);
            v.require(r.cleared && r.monotone, "KW replay at n=" + std::to_string(n));
        }
    });

    criterion(5, "dagw <= 4", 300, [](Verdict& v) {
        const SolveOutcome out = solve_visible(gen_switch_all(1), GameConfig{Variant::DAGW, 4, true});
        v.require(out.cops_win(), "exact DAGW with 4 cops at n=1");
        const MeasureReport r = run_report(Family::SwitchAll, 0, 8);
        bool recorded = false;
        for (const auto& e : r.entries)
            if (e.measure == "dagw" && e.provenance == Provenance::Certificate && e.n == 8)
                recorded = e.verified && e.claimed_bound == 4 && !e.note.empty();
        v.require(recorded, "report certificate-implication entry at n=8");
    });

    criterion(6, "ent <= 3", 300, [](Verdict& v) {
        v.require(solve_entanglement(gen_switch_all(1), 3).cops_win(), "exact ENT with 3 cops at n=1");
        for (int n = 1; n <= 4; ++n) {
            const StrategyCheck c = verify_ent_strategy(gen_switch_all(n), ent_strategy_switch_all(n), 3);
            v.require(c.ok, "strategy at n=" + std::to_string(n) + ": " + c.failure);
        }
    });

    criterion(7, "cliquewidth expressions (10 and 9 colours)", 10, [](Verdict& v) {
        for (int n = 1; n <= 8; ++n) {
            const cw::VerifyReport s = cw::verify_family_expr(Family::SwitchAll, n);
            v.require(s.equal && s.colour_count == 10, "switch-all at n=" + std::to_string(n));
            const cw::VerifyReport z = cw::verify_family_expr(Family::Zadeh, n);
            v.require(z.equal && z.colour_count == 9, "zadeh at n=" + std::to_string(n));
        }
    });

    criterion(8, "dagw and kw within dpw + 1 (200 digraphs)", 600, [](Verdict& v) {
        const SuiteResult r = width_gap_suite(kDefaultSuiteSeed, 200);
        v.require(r.ok() && r.cases == 200, suite_detail(r));
    });

    criterion(9, "entanglement-one characterisation", 600, [](Verdict& v) {
        const SuiteResult r = ent_one_suite(kDefaultSuiteSeed, 100);
        v.require(r.ok() && r.cases == 2 + 16 + 512 + 65536 + 100, suite_detail(r));
    });

    criterion(10, "acyclic graphs have entanglement 0 (50 DAGs)", 60, [](Verdict& v) {
        const SuiteResult r = acyclic_ent_suite(kDefaultSuiteSeed, 50);
        v.require(r.ok() && r.cases == 50, suite_detail(r));
    });

    criterion(11, "normalised moves match full moves (100 digraphs)", 600, [](Verdict& v) {
        const SuiteResult r = normalization_suite(kDefaultSuiteSeed, 100);
        v.require(r.ok() && r.cases == 100, suite_detail(r));
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
