#pragma once

#include <optional>
#include <vector>

#include "dgw/pursuit/game.hpp"

namespace dgw {

/// Robber-space update of the invisible games for a cop move C -> C':
///   KW (inert):  R' = (R ∪ Reach_{G-(C∩C')}(R ∩ C')) \ C'
///   DPW:         R' = Reach_{G-(C∩C')}(R) \ C'
VertexSet advance_robber_space(const Graph& graph, Variant semantics, const VertexSet& cops,
                               const VertexSet& next, const VertexSet& robber_space);

/// Search for a clearing placement sequence in the KW or DPW game on graphs
/// with at most 64 vertices. Breadth-first over states (C, R) starting at
/// (∅, V) with normalised cop moves; under require_monotone a move whose R'
/// is not contained in R is pruned, so R never grows. Cops win iff some
/// state with R = ∅ is reachable; the witness is a shortest such sequence.
SolveOutcome solve_invisible(const Graph& graph, const GameConfig& config, const SolverLimits& limits = {});

/// Open-loop cop strategy for an invisible-robber game: placements C_1, C_2,
/// ... applied in turn from C_0 = ∅.
struct SweepCertificate {
    int budget = 0;
    std::vector<VertexSet> placements;
};

struct SweepReport {
    bool cleared = false;    ///< final robber space is empty
    bool monotone = true;    ///< no step ever let R gain a vertex
    std::optional<std::size_t> first_violation;  ///< index into placements
    std::size_t steps = 0;

    /// cleared, and monotone when monotonicity was required.
    bool ok(bool require_monotone) const { return cleared && (monotone || !require_monotone); }
};

/// Replays a certificate from (∅, V) under KW or DPW semantics. Any
/// placement jump is accepted; monotonicity is checked at every step.
/// Throws InputError if a placement exceeds the certificate budget or is
/// over the wrong universe.
SweepReport verify_sweep(const Graph& graph, const SweepCertificate& cert, Variant semantics);

/// Four-cop monotone sweep of gen_switch_all(n): park cops on r and s; per
/// layer i guard e_i and walk the fourth cop over d_i, g_i, f_i, h_i, k_i;
/// then walk it over x, a_{2n}, t_{2n}, ..., a_1, t_1 and finally c.
/// Consecutive placements differ by one placed or lifted cop.
SweepCertificate dpw_sweep_certificate_switch_all(int n);

}  // namespace dgw
