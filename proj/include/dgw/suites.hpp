#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dgw {

inline constexpr std::uint64_t kDefaultSuiteSeed = 2012;

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    /// One line per failing case, carrying the offending graph as JSON.
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool ok() const { return passed == cases; }
};

// Random instances: a std::mt19937_64 seeded with the suite seed draws, per
// instance, the vertex count, an edge probability in [0.15, 0.85) and a
// graph seed for gen_random_digraph.

/// dagw <= dpw + 1 and kw <= dpw + 1 on `count` random digraphs with 1..6
/// vertices (monotone games).
SuiteResult width_gap_suite(std::uint64_t seed, int count = 200);

/// entanglement_is_one(g) agrees with the exact entanglement solver on every
/// digraph with 1..4 vertices (digraph_from_code, self-loops included) and
/// on `random_count` random digraphs with 5..6 vertices.
SuiteResult ent_one_suite(std::uint64_t seed, int random_count = 100);

/// Entanglement 0 on `count` random DAGs with 1..10 vertices.
SuiteResult acyclic_ent_suite(std::uint64_t seed, int count = 50);

/// Normalised and full-move solvers agree on the winner for TW and DAGW, at
/// every cop count, monotone and non-monotone, on `count` random digraphs
/// with 1..5 vertices.
SuiteResult normalization_suite(std::uint64_t seed, int count = 100);

std::vector<SuiteResult> run_property_suites(std::uint64_t seed);

}  // namespace dgw
