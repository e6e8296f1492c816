#pragma once

#include <optional>

#include "dgw/pursuit/game.hpp"
#include "dgw/pursuit/visible.hpp"

namespace dgw {

/// Exact decider for the entanglement game with k cops on graphs with at
/// most 64 vertices. From (C, v) the cops stay, bring a new cop onto v, or
/// move one cop w != v onto v; the robber must then leave v along an edge to
/// a cop-free vertex. Cops win finite plays, the robber infinite ones.
SolveOutcome solve_entanglement(const Graph& graph, int cops, const SolverLimits& limits = {});

/// Some vertex of the (possibly trivial) component whose removal leaves it
/// acyclic, smallest id first; nullopt if there is none.
std::optional<Vertex> feedback_vertex(const Graph& graph, const std::vector<Vertex>& component);

/// Entanglement is exactly one iff the graph has a cycle and every strongly
/// connected component has a feedback vertex.
bool entanglement_is_one(const Graph& graph);

/// One-cop strategy for graphs characterised by entanglement_is_one: when
/// the robber stands on the feedback vertex of its component the cop moves
/// there, otherwise the cop stays.
CopStrategy one_cop_strategy(const Graph& graph);

/// Three-cop strategy on gen_switch_all(n): one cop plays one_cop_strategy
/// on G_n - {r, s}; whenever the robber steps on r or s a fresh cop follows
/// it there and stays for the rest of the play.
CopStrategy ent_strategy_switch_all(int n);

/// Plays `strategy` against every robber reply from every start. Succeeds
/// iff every cop move is legal for k cops and no play repeats a position
/// (all plays are finite, so they end with the robber stuck).
StrategyCheck verify_ent_strategy(const Graph& graph, const CopStrategy& strategy, int cops);

}  // namespace dgw
