#include "dgw/pursuit/measure.hpp"

#include <algorithm>

namespace dgw {

SolveOutcome solve(const Graph& graph, const GameConfig& config, const SolverLimits& limits) {
    switch (config.variant) {
        case Variant::TW:
        case Variant::DAGW: return solve_visible(graph, config, limits);
        case Variant::KW:
        case Variant::DPW: return solve_invisible(graph, config, limits);
        case Variant::ENT: return solve_entanglement(graph, config.cops, limits);
    }
    return {};
}

int cop_offset(Variant variant) { return variant == Variant::TW || variant == Variant::DPW ? 1 : 0; }

MeasureResult measure(const Graph& graph, Variant variant, bool require_monotone, const SolverLimits& limits) {
    MeasureResult result;
    const int n = static_cast<int>(graph.vertex_count());
    for (int k = 0; k <= n; ++k) {
        SolverLimits remaining = limits;
        remaining.max_states = limits.max_states > result.states_explored ? limits.max_states - result.states_explored : 0;
        const SolveOutcome out = solve(graph, {variant, k, require_monotone}, remaining);
        result.states_explored += out.states_explored;
        if (out.budget_exhausted()) return result;
        if (out.cops_win()) {
            result.cops_needed = k;
            result.value = std::max(0, k - cop_offset(variant));
            return result;
        }
    }
    // unreachable: n cops can occupy every vertex in all five games
    result.cops_needed = n;
    result.value = std::max(0, n - cop_offset(variant));
    return result;
}

}  // namespace dgw
