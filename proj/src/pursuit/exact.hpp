#pragma once

#include "dgw/errors.hpp"
#include "dgw/graph.hpp"
#include "dgw/pursuit/game.hpp"

namespace dgw::detail {

inline void require_exact_size(const Graph& graph) {
    if (!graph.fits_mask())
        throw InputError("exact solvers support at most 64 vertices, graph has " +
                         std::to_string(graph.vertex_count()));
}

inline void require_cop_count(const Graph& graph, int cops) {
    if (cops < 0 || static_cast<std::size_t>(cops) > graph.vertex_count())
        throw InputError("cop count " + std::to_string(cops) + " outside 0.." +
                         std::to_string(graph.vertex_count()));
}

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

}  // namespace dgw::detail
