#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgw/graph.hpp"

namespace dgw {

/// The five pursuit games. TW is played on the symmetric closure of the
/// input; every other variant on the graph as given.
enum class Variant { TW, DAGW, KW, DPW, ENT };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct GameConfig {
    Variant variant = Variant::DAGW;
    int cops = 0;
    /// Ignored by the entanglement game.
    bool require_monotone = true;
};

struct SolverLimits {
    /// Upper bound on the number of game positions a solver may allocate or
    /// visit before giving up with an unresolved outcome.
    std::uint64_t max_states = 50'000'000;
};

enum class Winner { Cops, Robber };

/// Cop strategy as a function of the visible position (C, v): returns the
/// next placement C'.
using CopStrategy = std::function<VertexSet(const VertexSet& cops, Vertex robber)>;

/// Positional cop strategy recorded by an exact solver, defined on the
/// cop-winning positions it explored. Exact solvers only handle graphs with
/// at most 64 vertices, so placements are stored as masks.
class PositionalStrategy {
public:
    explicit PositionalStrategy(std::size_t universe = 0) : universe_(universe), moves_(universe) {}

    void set(std::uint64_t cops, Vertex robber, std::uint64_t next) { moves_.at(robber)[cops] = next; }
    std::optional<std::uint64_t> next_mask(std::uint64_t cops, Vertex robber) const;
    std::optional<VertexSet> next(const VertexSet& cops, Vertex robber) const;
    std::size_t size() const;

    /// Undefined positions map to "no move" (C' = C).
    CopStrategy as_function() const;

private:
    std::size_t universe_;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> moves_;
};

struct SolveOutcome {
    /// Empty when the state budget ran out before the game was decided.
    std::optional<Winner> winner;
    /// Visible and entanglement games: cop strategy on the winning region.
    std::optional<PositionalStrategy> strategy;
    /// Invisible games: a clearing placement sequence C_1, C_2, ... applied
    /// from (C_0 = ∅, R = V).
    std::optional<std::vector<VertexSet>> placements;
    std::uint64_t states_explored = 0;

    bool cops_win() const { return winner == Winner::Cops; }
    bool budget_exhausted() const { return !winner.has_value(); }
};

}  // namespace dgw
