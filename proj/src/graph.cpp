#include "dgw/graph.hpp"

#include <algorithm>

#include "dgw/errors.hpp"

namespace dgw {

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)) {
    const std::size_t n = names_.size();
    index_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (names_[v].empty()) throw InputError("vertex " + std::to_string(v) + " has an empty name");
        if (!index_.emplace(names_[v], static_cast<Vertex>(v)).second)
            throw InputError("duplicate vertex name \"" + names_[v] + "\"");
    }
    succ_.assign(n, {});
    pred_.assign(n, {});
    for (const auto& [from, to] : edges) {
        if (from >= n || to >= n)
            throw InputError("dangling endpoint in edge [" + std::to_string(from) + "," + std::to_string(to) + "]");
        succ_[from].push_back(to);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& s = succ_[v];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        edge_count_ += s.size();
        for (Vertex w : s) pred_[w].push_back(static_cast<Vertex>(v));
    }
    if (n <= 64) {
        succ_mask_.assign(n, 0);
        pred_mask_.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex w : succ_[v]) {
                succ_mask_[v] |= std::uint64_t{1} << w;
                pred_mask_[w] |= std::uint64_t{1} << v;
            }
    }
}

std::optional<Vertex> Graph::find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::id(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex name \"" + std::string(name) + "\"");
}

bool Graph::has_edge(Vertex from, Vertex to) const {
    const auto& s = succ_.at(from);
    return std::binary_search(s.begin(), s.end(), to);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t v = 0; v < succ_.size(); ++v)
        for (Vertex w : succ_[v]) out.emplace_back(static_cast<Vertex>(v), w);
    return out;
}

VertexSet Graph::make_set(std::initializer_list<std::string_view> names) const {
    VertexSet s(vertex_count());
    for (auto n : names) s.insert(id(n));
    return s;
}

Vertex GraphBuilder::add_vertex(std::string name) {
    const auto v = static_cast<Vertex>(names_.size());
    if (!index_.emplace(name, v).second) throw InputError("duplicate vertex name \"" + name + "\"");
    names_.push_back(std::move(name));
    return v;
}

void GraphBuilder::add_edge(std::string_view from, std::string_view to) {
    add_edge(id(from), id(to));
}

Vertex GraphBuilder::id(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) throw InputError("unknown vertex name \"" + std::string(name) + "\"");
    return it->second;
}

Graph GraphBuilder::build() && {
    return Graph(std::move(names_), std::move(edges_));
}

namespace {

void check_universe(const Graph& graph, const VertexSet& set, const char* what) {
    if (set.universe() != graph.vertex_count())
        throw InputError(std::string(what) + " is over a universe of " + std::to_string(set.universe()) +
                         " vertices, graph has " + std::to_string(graph.vertex_count()));
}

}  // namespace

VertexSet reachable(const Graph& graph, const VertexSet& blocked, const VertexSet& sources) {
    check_universe(graph, blocked, "blocked set");
    check_universe(graph, sources, "source set");
    VertexSet seen = sources - blocked;
    std::vector<Vertex> stack = seen.members();
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : graph.successors(v)) {
            if (blocked.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

Graph symmetric_closure(const Graph& graph) {
    std::vector<Edge> edges = graph.edges();
    const std::size_t m = edges.size();
    for (std::size_t i = 0; i < m; ++i) edges.emplace_back(edges[i].second, edges[i].first);
    return Graph(graph.names(), std::move(edges));
}

std::vector<std::vector<Vertex>> sccs(const Graph& graph) {
    // Iterative Tarjan; components come out in reverse topological order.
    const std::size_t n = graph.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> out;
    std::size_t counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto succ = graph.successors(f.v);
            if (f.next < succ.size()) {
                const Vertex w = succ[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& graph, const VertexSet& keep) {
    check_universe(graph, keep, "keep set");
    const std::size_t n = graph.vertex_count();
    std::vector<Vertex> remap(n, static_cast<Vertex>(-1));
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v) {
        if (!keep.contains(v)) continue;
        remap[v] = static_cast<Vertex>(names.size());
        names.push_back(graph.name(v));
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : graph.edges())
        if (keep.contains(a) && keep.contains(b)) edges.emplace_back(remap[a], remap[b]);
    return Graph(std::move(names), std::move(edges));
}

bool is_acyclic(const Graph& graph) {
    // Kahn's algorithm; a self-loop keeps its vertex's in-degree positive.
    const std::size_t n = graph.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : graph.successors(v)) ++indeg[w];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        const Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : graph.successors(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == n;
}

}  // namespace dgw
