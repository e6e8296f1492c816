#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgw/vertex_set.hpp"

namespace dgw {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite directed graph with dense ids 0..vertex_count-1 and
/// unique, non-empty vertex names. Self-loops are allowed, parallel edges
/// are not. Successor lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// Validates names and endpoints; duplicate edges are collapsed.
    Graph(std::vector<std::string> names, std::vector<Edge> edges);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Vertex> find(std::string_view name) const;
    /// Like find() but throws InputError for unknown names.
    Vertex id(std::string_view name) const;

    std::span<const Vertex> successors(Vertex v) const {
        const auto& s = succ_.at(v);
        return {s.data(), s.size()};
    }
    std::span<const Vertex> predecessors(Vertex v) const {
        const auto& p = pred_.at(v);
        return {p.data(), p.size()};
    }
    bool has_edge(Vertex from, Vertex to) const;

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet make_set(std::initializer_list<std::string_view> names) const;

    /// Bitset view of the successor lists. Only available when
    /// vertex_count() <= 64, which is the size limit of the exact solvers.
    bool fits_mask() const { return vertex_count() <= 64; }
    std::uint64_t successor_mask(Vertex v) const { return succ_mask_.at(v); }
    std::uint64_t predecessor_mask(Vertex v) const { return pred_mask_.at(v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.succ_ == b.succ_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
    std::vector<std::uint64_t> succ_mask_;
    std::vector<std::uint64_t> pred_mask_;
    std::unordered_map<std::string, Vertex> index_;
    std::size_t edge_count_ = 0;
};

/// Incremental construction helper used by the generators.
class GraphBuilder {
public:
    Vertex add_vertex(std::string name);
    void add_edge(Vertex from, Vertex to) { edges_.emplace_back(from, to); }
    void add_edge(std::string_view from, std::string_view to);
    Vertex id(std::string_view name) const;
    Graph build() &&;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Edge> edges_;
};

/// Vertices reachable from `sources` along directed paths inside
/// graph - blocked. Sources that are themselves blocked contribute nothing.
VertexSet reachable(const Graph& graph, const VertexSet& blocked, const VertexSet& sources);

/// Edge set E ∪ E⁻¹; names and ids preserved.
Graph symmetric_closure(const Graph& graph);

/// Strongly connected components, listed in a topological order of the
/// condensation (every edge stays inside a component or points to a later
/// one). Members of each component are sorted.
std::vector<std::vector<Vertex>> sccs(const Graph& graph);

/// Subgraph induced by `keep`, re-indexed densely in ascending id order.
Graph induced_subgraph(const Graph& graph, const VertexSet& keep);

/// True iff there is no directed cycle; a self-loop counts as a cycle.
bool is_acyclic(const Graph& graph);

/// Bitmask reachability for graphs that fit_mask(): vertices reachable
/// from `sources & ~blocked` in graph - blocked.
inline std::uint64_t reach_mask(const Graph& graph, std::uint64_t blocked, std::uint64_t sources) {
    std::uint64_t seen = sources & ~blocked;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        const Vertex v = static_cast<Vertex>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        const std::uint64_t next = graph.successor_mask(v) & ~blocked & ~seen;
        seen |= next;
        frontier |= next;
    }
    return seen;
}

}  // namespace dgw
