#pragma once

#include <string>
#include <string_view>

#include "dgw/graph.hpp"

namespace dgw {

/// Compact JSON document:
///   {"vertices":[{"id":0,"name":"x"},...],"edges":[[from,to],...]}
/// Edges are emitted in lexicographic order, so output is deterministic.
std::string serialize_graph(const Graph& graph);

/// Inverse of serialize_graph. Vertex objects may appear in any order but
/// their ids must be exactly 0..n-1. Throws ParseError naming the offending
/// element for malformed JSON, duplicate ids/names or dangling endpoints.
Graph parse_graph(std::string_view text);

/// Graphviz export, one node per vertex labelled with its name.
std::string to_dot(const Graph& graph);

Graph read_graph_file(const std::string& path);

}  // namespace dgw
