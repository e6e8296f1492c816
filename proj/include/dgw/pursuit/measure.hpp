#pragma once

#include <optional>

#include "dgw/pursuit/entanglement.hpp"
#include "dgw/pursuit/game.hpp"
#include "dgw/pursuit/invisible.hpp"
#include "dgw/pursuit/visible.hpp"

namespace dgw {

/// Dispatches to the exact solver for config.variant.
SolveOutcome solve(const Graph& graph, const GameConfig& config, const SolverLimits& limits = {});

struct MeasureResult {
    std::optional<int> value;        ///< empty iff the budget ran out
    int cops_needed = 0;             ///< least winning cop count found
    std::uint64_t states_explored = 0;

    bool budget_exceeded() const { return !value.has_value(); }
};

/// Width measure by exact solving, trying k = 0, 1, 2, ... cops. TW and DPW
/// report cops_needed - 1 (floored at 0); DAGW, KW and ENT report the cop
/// count itself.
MeasureResult measure(const Graph& graph, Variant variant, bool require_monotone = true,
                      const SolverLimits& limits = {});

/// Offset between cop count and measure value for a variant (1 for TW, DPW).
int cop_offset(Variant variant);

}  // namespace dgw
