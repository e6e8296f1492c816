#pragma once

#include <cstdint>
#include <string>

#include "dgw/graph.hpp"

namespace dgw {

enum class Family { SwitchAll, Zadeh, CompleteBipartite, DirectedCycle, DirectedPath, RandomDigraph };

/// Switch-all counterexample graph, 10n+4 vertices.
///
/// Canonical id order (part of the contract; certificates and cliquewidth
/// verification refer to it): x, s, c, r, t1..t{2n}, a1..a{2n}, then per
/// layer i = 1..n: d{i}, e{i}, f{i}, g{i}, h{i}, k{i}.
Graph gen_switch_all(int n);

/// Least-entered counterexample graph, 13n+3 vertices.
///
/// Canonical order: s, t, k{n+1}, then per layer i = 1..n: k{i}, then for
/// j = 0, 1: c{i}^{j}, A{i}^{j}, b{i},0^{j}, b{i},1^{j}, d{i}^{j}, h{i}^{j}.
/// The k-clique carries no self-loops; empty index ranges add no edges.
Graph gen_zadeh(int n);

/// K_{a,b} as a symmetric digraph: u0..u{a-1}, then w0..w{b-1}.
Graph gen_complete_bipartite(int a, int b);

/// v0 -> v1 -> ... -> v{n-1} -> v0. A 1-cycle is a self-loop.
Graph gen_directed_cycle(int n);

/// v0 -> v1 -> ... -> v{n-1}.
Graph gen_directed_path(int n);

/// G(v, p) without self-loops. Ordered pairs (u, w), u != w, are visited
/// row-major (u ascending, then w ascending); each consumes one output x of
/// std::mt19937_64 seeded with `seed`, and the edge is present iff
/// (x >> 11) * 2^-53 < p. mt19937_64 is fully specified by the standard, so
/// the graphs are reproducible across platforms.
Graph gen_random_digraph(int v, double p, std::uint64_t seed);

/// Random DAG: gen_random_digraph(v, p, seed) keeping only edges u -> w
/// with u < w.
Graph gen_random_dag(int v, double p, std::uint64_t seed);

/// Digraph number `code` on v vertices (self-loops included): bit u*v + w
/// of `code` is the edge u -> w. Enumerating code = 0 .. 2^(v*v)-1 lists
/// every labelled digraph on v vertices exactly once.
Graph digraph_from_code(int v, std::uint64_t code);

struct BipartiteWitness {
    int n = 0;      ///< switch-all parameter hosting the witness
    VertexSet a;    ///< {a_j : j <= k}
    VertexSet b;    ///< {d_i : ceil(k/2) <= i <= ceil(k/2)+k-1}
};

/// K_{k,k} inside symmetric_closure(gen_switch_all(n)) with
/// n = ceil(k/2) + k - 1. Sets are over gen_switch_all(n)'s ids.
BipartiteWitness switch_all_bipartite_witness(int k);

/// A and B independent, fully adjacent to each other, in `graph`.
bool check_bipartite_witness(const Graph& graph, const VertexSet& a, const VertexSet& b);

std::string family_name(Family f);
Family parse_family(const std::string& name);

}  // namespace dgw
