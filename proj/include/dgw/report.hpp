#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgw/families.hpp"
#include "dgw/pursuit/game.hpp"

namespace dgw {

enum class Provenance { ExactSolve, Certificate, CwExpression, WitnessSubgraph, NotChecked };

std::string provenance_name(Provenance p);

struct ReportEntry {
    std::string measure;                 ///< tw, dpw, dagw, kw, ent or cw
    int n = 0;
    std::optional<int> claimed_bound;    ///< empty means unbounded
    Provenance provenance = Provenance::NotChecked;
    /// Exact value (exact-solve), proven bound (certificate, cw-expression)
    /// or lower bound (witness-subgraph). Empty if nothing was obtained.
    std::optional<int> value;
    bool verified = false;
    double seconds = 0.0;
    std::string note;
};

/// Claimed upper bounds for one update rule; empty entries are unbounded,
/// `cw` may also be unknown.
struct TableRow {
    std::string rule;
    std::optional<int> tw, dpw, dagw, kw, ent, cw;
    bool cw_known = true;
};

struct MeasureReport {
    Family family = Family::SwitchAll;
    int n_exact = 0;
    int n_cert = 0;
    std::uint64_t budget = 0;
    std::vector<ReportEntry> entries;
    std::vector<TableRow> unchecked_rows;

    /// Every entry whose provenance is not not-checked has verified = true.
    bool all_verified() const;
};

/// Upper-bound table: switch-all and least-entered first, then the rules
/// whose graph families are not constructed here.
std::vector<TableRow> bound_table();

/// Recomputes the bound table for SwitchAll or Zadeh: exact solves for
/// n = 1..n_exact, certificates and expressions for n = 1..n_cert. An
/// exhausted state budget turns the entry into not-checked.
MeasureReport run_report(Family family, int n_exact, int n_cert, const SolverLimits& limits = {});

nlohmann::ordered_json to_json(const MeasureReport& report);

}  // namespace dgw
