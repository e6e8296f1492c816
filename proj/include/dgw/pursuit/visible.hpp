#pragma once

#include <string>

#include "dgw/pursuit/game.hpp"

namespace dgw {

/// Exact decider for the visible-robber games (TW, DAGW) on graphs with at
/// most 64 vertices.
///
/// Cop moves are normalised to "lift one cop" or "place one cop". The cop
/// attractor towards capture is computed by fixed-point iteration over the
/// positions (C, v); under require_monotone a lift the robber could reach is
/// unavailable. Cops win iff every starting vertex is in the attractor.
SolveOutcome solve_visible(const Graph& graph, const GameConfig& config, const SolverLimits& limits = {});

/// Reference decider with unrestricted cop moves C -> C' (any |C'| <= k).
/// Exponential in the number of vertices; used to cross-check the
/// normalised solver on tiny graphs (at most 12 vertices).
Winner solve_visible_full_moves(const Graph& graph, const GameConfig& config);

struct StrategyCheck {
    bool ok = false;
    std::string failure;           ///< empty when ok
    std::size_t positions = 0;     ///< cop positions reached by some play
};

/// Plays `strategy` against every robber reply in the visible game from
/// every starting vertex. Succeeds iff each play is legal (budget and, if
/// required, monotonicity), never revisits a cop position, and ends with the
/// robber captured.
StrategyCheck verify_visible_strategy(const Graph& graph, const GameConfig& config, const CopStrategy& strategy);

}  // namespace dgw
