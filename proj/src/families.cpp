#include "dgw/families.hpp"

#include <random>

#include "dgw/errors.hpp"

namespace dgw {

namespace {

void require_positive(int n, const char* what) {
    if (n < 1) throw InputError(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

}  // namespace

Graph gen_switch_all(int n) {
    require_positive(n, "switch-all parameter n");
    GraphBuilder g;
    for (const char* v : {"x", "s", "c", "r"}) g.add_vertex(v);
    for (int i = 1; i <= 2 * n; ++i) g.add_vertex(idx("t", i));
    for (int i = 1; i <= 2 * n; ++i) g.add_vertex(idx("a", i));
    for (int i = 1; i <= n; ++i)
        for (const char* p : {"d", "e", "f", "g", "h", "k"}) g.add_vertex(idx(p, i));

    for (const char* tgt : {"s", "r", "c"}) g.add_edge("t1", tgt);
    for (int i = 2; i <= 2 * n; ++i) {
        g.add_edge(idx("t", i), "s");
        g.add_edge(idx("t", i), "r");
        g.add_edge(idx("t", i), idx("t", i - 1));
    }
    for (int i = 1; i <= 2 * n; ++i) g.add_edge(idx("a", i), idx("t", i));
    g.add_edge("c", "s");
    g.add_edge("c", "r");
    for (int i = 1; i <= n; ++i) {
        const auto d = idx("d", i), e = idx("e", i), f = idx("f", i);
        const auto gi = idx("g", i), h = idx("h", i), k = idx("k", i);
        g.add_edge(d, "s");
        g.add_edge(d, "r");
        g.add_edge(d, e);
        for (int j = 1; j <= 2 * i; ++j) g.add_edge(d, idx("a", j));
        g.add_edge(e, d);
        g.add_edge(e, h);
        g.add_edge(gi, f);
        g.add_edge(gi, k);
        g.add_edge(k, "x");
        for (int j = i + 1; j <= n; ++j) g.add_edge(k, idx("g", j));
        g.add_edge(f, e);
        g.add_edge(h, k);
    }
    g.add_edge("s", "x");
    g.add_edge("r", "x");
    for (int j = 1; j <= n; ++j) {
        g.add_edge("s", idx("f", j));
        g.add_edge("r", idx("g", j));
    }
    g.add_edge("x", "x");
    return std::move(g).build();
}

Graph gen_zadeh(int n) {
    require_positive(n, "zadeh parameter n");
    auto k = [](int i) { return idx("k", i); };
    auto named = [](const char* p, int i, int j) { return p + std::to_string(i) + "^" + std::to_string(j); };
    auto b = [](int i, int bit, int j) {
        return "b" + std::to_string(i) + "," + std::to_string(bit) + "^" + std::to_string(j);
    };

    GraphBuilder g;
    g.add_vertex("s");
    g.add_vertex("t");
    g.add_vertex(k(n + 1));
    for (int i = 1; i <= n; ++i) {
        g.add_vertex(k(i));
        for (int j = 0; j <= 1; ++j) {
            g.add_vertex(named("c", i, j));
            g.add_vertex(named("A", i, j));
            g.add_vertex(b(i, 0, j));
            g.add_vertex(b(i, 1, j));
            g.add_vertex(named("d", i, j));
            g.add_vertex(named("h", i, j));
        }
    }

    g.add_edge("t", "t");
    g.add_edge("s", "t");
    for (int l = 1; l <= n; ++l) g.add_edge("s", k(l));
    g.add_edge(k(n + 1), "t");
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= 1; ++j) g.add_edge(k(i), named("c", i, j));
        g.add_edge(k(i), "t");
        for (int l = 1; l <= n; ++l)
            if (l != i) g.add_edge(k(i), k(l));
        for (int j = 0; j <= 1; ++j) {
            const auto a = named("A", i, j), d = named("d", i, j);
            g.add_edge(d, named("h", i, j));
            g.add_edge(d, "s");
            g.add_edge(a, d);
            for (int bit = 0; bit <= 1; ++bit) {
                const auto bv = b(i, bit, j);
                g.add_edge(a, bv);
                g.add_edge(bv, "t");
                g.add_edge(bv, a);
                for (int l = 1; l <= n; ++l) g.add_edge(bv, k(l));
            }
            g.add_edge(named("c", i, j), a);
        }
        g.add_edge(named("h", i, 0), "t");
        for (int l = i + 2; l <= n; ++l) g.add_edge(named("h", i, 0), k(l));
        g.add_edge(named("h", i, 1), k(i + 1));
    }
    return std::move(g).build();
}

Graph gen_complete_bipartite(int a, int b) {
    require_positive(a, "bipartite side a");
    require_positive(b, "bipartite side b");
    GraphBuilder g;
    for (int i = 0; i < a; ++i) g.add_vertex(idx("u", i));
    for (int j = 0; j < b; ++j) g.add_vertex(idx("w", j));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
            g.add_edge(static_cast<Vertex>(a + j), static_cast<Vertex>(i));
        }
    return std::move(g).build();
}

Graph gen_directed_cycle(int n) {
    require_positive(n, "cycle length");
    GraphBuilder g;
    for (int i = 0; i < n; ++i) g.add_vertex(idx("v", i));
    for (int i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return std::move(g).build();
}

Graph gen_directed_path(int n) {
    require_positive(n, "path length");
    GraphBuilder g;
    for (int i = 0; i < n; ++i) g.add_vertex(idx("v", i));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return std::move(g).build();
}

Graph gen_random_digraph(int v, double p, std::uint64_t seed) {
    require_positive(v, "vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    GraphBuilder g;
    for (int i = 0; i < v; ++i) g.add_vertex(idx("v", i));
    for (int u = 0; u < v; ++u)
        for (int w = 0; w < v; ++w) {
            if (u == w) continue;
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(w));
        }
    return std::move(g).build();
}

Graph gen_random_dag(int v, double p, std::uint64_t seed) {
    const Graph g = gen_random_digraph(v, p, seed);
    std::vector<Edge> forward;
    for (const auto& e : g.edges())
        if (e.first < e.second) forward.push_back(e);
    return Graph(g.names(), std::move(forward));
}

Graph digraph_from_code(int v, std::uint64_t code) {
    if (v < 0 || v > 8) throw InputError("digraph_from_code supports 0..8 vertices");
    std::vector<std::string> names;
    for (int i = 0; i < v; ++i) names.push_back(idx("v", i));
    std::vector<Edge> edges;
    for (int u = 0; u < v; ++u)
        for (int w = 0; w < v; ++w)
            if ((code >> (u * v + w)) & 1u) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    return Graph(std::move(names), std::move(edges));
}

BipartiteWitness switch_all_bipartite_witness(int k) {
    require_positive(k, "witness size k");
    const int half = (k + 1) / 2;
    BipartiteWitness w;
    w.n = half + k - 1;
    const Graph g = gen_switch_all(w.n);
    w.a = VertexSet(g.vertex_count());
    w.b = VertexSet(g.vertex_count());
    for (int j = 1; j <= k; ++j) w.a.insert(g.id(idx("a", j)));
    for (int i = half; i <= half + k - 1; ++i) w.b.insert(g.id(idx("d", i)));
    return w;
}

bool check_bipartite_witness(const Graph& graph, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != graph.vertex_count() || b.universe() != graph.vertex_count()) return false;
    if (a.intersects(b)) return false;
    const auto am = a.members(), bm = b.members();
    for (Vertex u : am) {
        for (Vertex w : bm)
            if (!graph.has_edge(u, w) || !graph.has_edge(w, u)) return false;
        for (Vertex w : am)
            if (graph.has_edge(u, w)) return false;
    }
    for (Vertex u : bm)
        for (Vertex w : bm)
            if (graph.has_edge(u, w)) return false;
    return true;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::SwitchAll: return "switch-all";
        case Family::Zadeh: return "zadeh";
        case Family::CompleteBipartite: return "bipartite";
        case Family::DirectedCycle: return "cycle";
        case Family::DirectedPath: return "path";
        case Family::RandomDigraph: return "random";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::SwitchAll, Family::Zadeh, Family::CompleteBipartite, Family::DirectedCycle,
                     Family::DirectedPath, Family::RandomDigraph})
        if (family_name(f) == name) return f;
    throw InputError("unknown family \"" + name + "\"");
}

}  // namespace dgw
