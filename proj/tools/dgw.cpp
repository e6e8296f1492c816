// Command-line front end: generators, solvers, certificates, cliquewidth
// expressions, the bound report and the property suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dgw/cliquewidth.hpp"
#include "dgw/errors.hpp"
#include "dgw/families.hpp"
#include "dgw/graph_io.hpp"
#include "dgw/pursuit/measure.hpp"
#include "dgw/report.hpp"
#include "dgw/suites.hpp"

namespace {

using json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw dgw::InputError("cannot open " + path + " for writing");
    out << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct GenArgs {
    std::string family;
    int n = 1;
    int k = -1;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenArgs& a) {
    const dgw::Family family = dgw::parse_family(a.family);
    dgw::Graph g = [&] {
        switch (family) {
            case dgw::Family::SwitchAll: return dgw::gen_switch_all(a.n);
            case dgw::Family::Zadeh: return dgw::gen_zadeh(a.n);
            case dgw::Family::CompleteBipartite: return dgw::gen_complete_bipartite(a.n, a.k < 0 ? a.n : a.k);
            case dgw::Family::DirectedCycle: return dgw::gen_directed_cycle(a.n);
            case dgw::Family::DirectedPath: return dgw::gen_directed_path(a.n);
            case dgw::Family::RandomDigraph: return dgw::gen_random_digraph(a.n, a.p, a.seed);
        }
        throw dgw::InputError("unknown family");
    }();
    if (a.format == "json")
        write_output(dgw::serialize_graph(g) + "\n", a.out);
    else if (a.format == "dot")
        write_output(dgw::to_dot(g), a.out);
    else
        throw dgw::InputError("format must be json or dot");
    return 0;
}

struct SolveArgs {
    std::string measure;
    std::string graph;
    int k = -1;
    bool non_monotone = false;
    std::uint64_t budget = dgw::SolverLimits{}.max_states;
};

int run_solve(const SolveArgs& a) {
    const dgw::Variant v = dgw::parse_variant(a.measure);
    const dgw::Graph g = dgw::read_graph_file(a.graph);
    const dgw::SolverLimits limits{a.budget};
    const auto start = std::chrono::steady_clock::now();
    json out;
    out["measure"] = a.measure;
    if (a.k >= 0) {
        const auto r = dgw::solve(g, dgw::GameConfig{v, a.k, !a.non_monotone}, limits);
        out["k"] = a.k;
        out["winner"] = r.budget_exhausted() ? json(nullptr) : json(r.cops_win() ? "cops" : "robber");
        out["states_explored"] = r.states_explored;
    } else {
        const auto r = dgw::measure(g, v, !a.non_monotone, limits);
        out["value"] = r.value ? json(*r.value) : json(nullptr);
        out["states_explored"] = r.states_explored;
    }
    out["seconds"] = seconds_since(start);
    std::cout << out.dump() << "\n";
    return 0;
}

int run_certify(const std::string& measure_name, const std::string& family, int n) {
    if (dgw::parse_family(family) != dgw::Family::SwitchAll)
        throw dgw::InputError("certificates exist for switch-all only");
    const dgw::Variant v = dgw::parse_variant(measure_name);
    const dgw::Graph g = dgw::gen_switch_all(n);
    const auto start = std::chrono::steady_clock::now();
    json out;
    out["measure"] = measure_name;
    out["family"] = family;
    out["n"] = n;
    bool ok = false;
    if (v == dgw::Variant::DPW || v == dgw::Variant::KW) {
        const auto cert = dgw::dpw_sweep_certificate_switch_all(n);
        const auto r = dgw::verify_sweep(g, cert, v);
        ok = r.ok(true);
        out["cops"] = cert.budget;
        out["steps"] = r.steps;
        out["cleared"] = r.cleared;
        out["monotone"] = r.monotone;
        out["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
    } else if (v == dgw::Variant::ENT) {
        const auto r = dgw::verify_ent_strategy(g, dgw::ent_strategy_switch_all(n), 3);
        ok = r.ok;
        out["cops"] = 3;
        out["positions"] = r.positions;
        out["failure"] = r.failure;
    } else {
        throw dgw::InputError("certify supports dpw, kw and ent");
    }
    out["verified"] = ok;
    out["seconds"] = seconds_since(start);
    std::cout << out.dump() << "\n";
    return ok ? 0 : 1;
}

int run_cw_verify(const std::string& family, int n) {
    const auto f = dgw::parse_family(family);
    if (f != dgw::Family::SwitchAll && f != dgw::Family::Zadeh)
        throw dgw::InputError("cw expressions exist for switch-all and zadeh");
    const auto r = dgw::cw::verify_family_expr(f, n);
    auto pairs = [](const auto& edges) {
        json arr = json::array();
        for (const auto& [u, w] : edges) arr.push_back({u, w});
        return arr;
    };
    json out;
    out["family"] = family;
    out["n"] = n;
    out["equal"] = r.equal;
    out["colour_count"] = r.colour_count;
    out["missing_edges"] = pairs(r.missing_edges);
    out["extra_edges"] = pairs(r.extra_edges);
    out["unknown_names"] = r.unknown_names;
    out["missing_vertices"] = r.missing_vertices;
    std::cout << out.dump() << "\n";
    return r.equal ? 0 : 1;
}

int run_cw_print(const std::string& family, int n) {
    const auto f = dgw::parse_family(family);
    if (f == dgw::Family::SwitchAll)
        std::cout << dgw::cw::to_sexpr(dgw::cw::build_switch_all_expr(n));
    else if (f == dgw::Family::Zadeh)
        std::cout << dgw::cw::to_sexpr(dgw::cw::build_zadeh_expr(n));
    else
        throw dgw::InputError("cw expressions exist for switch-all and zadeh");
    return 0;
}

int run_report(const std::string& family, int n_exact, int n_cert, std::uint64_t budget, const std::string& path) {
    const auto report = dgw::run_report(dgw::parse_family(family), n_exact, n_cert, dgw::SolverLimits{budget});
    write_output(dgw::to_json(report).dump(2) + "\n", path);
    return report.all_verified() ? 0 : 1;
}

int run_suite(std::uint64_t seed) {
    bool ok = true;
    for (const auto& r : dgw::run_property_suites(seed)) {
        json out;
        out["suite"] = r.name;
        out["seed"] = seed;
        out["cases"] = r.cases;
        out["passed"] = r.passed;
        out["seconds"] = r.seconds;
        out["failures"] = r.failures;
        std::cout << out.dump() << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed width measures and cops-and-robber games"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("--family", gen.family, "switch-all|zadeh|bipartite|cycle|path|random")->required();
    gen_cmd->add_option("--n", gen.n, "Size parameter")->required();
    gen_cmd->add_option("--k", gen.k, "Second side of bipartite (defaults to n)");
    gen_cmd->add_option("--p", gen.p, "Edge probability for random");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random");
    gen_cmd->add_option("--format", gen.format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    gen_cmd->add_option("--out", gen.out, "Output file");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game on a graph file");
    solve_cmd->add_option("--measure", solve.measure, "tw|dagw|kw|dpw|ent")->required();
    solve_cmd->add_option("--graph", solve.graph, "Graph JSON file")->required();
    solve_cmd->add_option("--k", solve.k, "Decide the game with k cops instead of computing the measure");
    solve_cmd->add_flag("--non-monotone", solve.non_monotone, "Drop the monotonicity requirement");
    solve_cmd->add_option("--budget", solve.budget, "Maximum number of states");

    std::string cert_measure, cert_family = "switch-all";
    int cert_n = 1;
    auto* cert_cmd = app.add_subcommand("certify", "Verify a cop strategy certificate");
    cert_cmd->add_option("--measure", cert_measure, "dpw|kw|ent")->required();
    cert_cmd->add_option("--family", cert_family, "switch-all");
    cert_cmd->add_option("--n", cert_n)->required();

    std::string cw_family;
    int cw_n = 1;
    auto* cw_cmd = app.add_subcommand("cw", "Cliquewidth expressions");
    cw_cmd->require_subcommand(1);
    auto* cw_verify = cw_cmd->add_subcommand("verify", "Evaluate the expression and compare with the generator");
    auto* cw_print = cw_cmd->add_subcommand("print", "Print the expression as an S-expression");
    for (auto* c : {cw_verify, cw_print}) {
        c->add_option("--family", cw_family, "switch-all|zadeh")->required();
        c->add_option("--n", cw_n)->required();
    }

    std::string rep_family, rep_json;
    int n_exact = 1, n_cert = 1;
    std::uint64_t rep_budget = dgw::SolverLimits{}.max_states;
    auto* rep_cmd = app.add_subcommand("report", "Recompute the bound table for a family");
    rep_cmd->add_option("--family", rep_family, "switch-all|zadeh")->required();
    rep_cmd->add_option("--n-exact", n_exact, "Exact solves for n = 1..N")->required();
    rep_cmd->add_option("--n-cert", n_cert, "Certificates for n = 1..M")->required();
    rep_cmd->add_option("--budget", rep_budget, "Maximum number of states per solve");
    rep_cmd->add_option("--json", rep_json, "Write the report to this file");

    std::uint64_t suite_seed = dgw::kDefaultSuiteSeed;
    auto* suite_cmd = app.add_subcommand("suite", "Run the randomised property suites");
    suite_cmd->add_option("--seed", suite_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*cert_cmd) return run_certify(cert_measure, cert_family, cert_n);
        if (*cw_verify) return run_cw_verify(cw_family, cw_n);
        if (*cw_print) return run_cw_print(cw_family, cw_n);
        if (*rep_cmd) return run_report(rep_family, n_exact, n_cert, rep_budget, rep_json);
        if (*suite_cmd) return run_suite(suite_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
