#include "dgw/pursuit/entanglement.hpp"

#include <unordered_map>

#include "dgw/families.hpp"
#include "exact.hpp"
#include "placements.hpp"

namespace dgw {

using detail::bit;

SolveOutcome solve_entanglement(const Graph& graph, int cops, const SolverLimits& limits) {
    detail::require_exact_size(graph);
    detail::require_cop_count(graph, cops);
    const auto n = static_cast<Vertex>(graph.vertex_count());
    SolveOutcome out;
    if (n == 0) {
        out.winner = Winner::Cops;
        out.strategy = PositionalStrategy(0);
        return out;
    }
    if (detail::PlacementIndex::count(static_cast<int>(n), cops) > limits.max_states / n) return out;

    const detail::PlacementIndex index(static_cast<int>(n), cops);
    std::vector<std::uint8_t> win(index.size() * n, 0);
    std::vector<std::uint64_t> choice(index.size() * n, 0);

    auto all_win = [&](std::uint64_t next, Vertex v) {
        const std::size_t base = index.rank(next) * n;
        for (std::uint64_t t = graph.successor_mask(v) & ~next; t != 0; t &= t - 1)
            if (win[base + static_cast<std::size_t>(std::countr_zero(t))] == 0) return false;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < index.size(); ++p) {
            const std::uint64_t c = index.mask(p);
            for (Vertex v = 0; v < n; ++v) {
                if ((c & bit(v)) != 0 || win[p * n + v] != 0) continue;
                std::optional<std::uint64_t> move;
                if (all_win(c, v)) move = c;
                if (!move && std::popcount(c) < cops && all_win(c | bit(v), v)) move = c | bit(v);
                for (std::uint64_t rest = c; !move && rest != 0; rest &= rest - 1) {
                    const std::uint64_t next = (c | bit(v)) & ~(rest & (~rest + 1));
                    if (all_win(next, v)) move = next;
                }
                if (move) {
                    win[p * n + v] = 1;
                    choice[p * n + v] = *move;
                    changed = true;
                }
            }
        }
    }

    out.states_explored = win.size();
    bool all = true;
    for (Vertex v = 0; v < n; ++v) all = all && win[v] != 0;
    out.winner = all ? Winner::Cops : Winner::Robber;
    if (all) {
        PositionalStrategy s(n);
        for (std::size_t p = 0; p < index.size(); ++p)
            for (Vertex v = 0; v < n; ++v)
                if (win[p * n + v] != 0) s.set(index.mask(p), v, choice[p * n + v]);
        out.strategy = std::move(s);
    }
    return out;
}

std::optional<Vertex> feedback_vertex(const Graph& graph, const std::vector<Vertex>& component) {
    VertexSet keep(graph.vertex_count());
    for (Vertex v : component) keep.insert(v);
    if (is_acyclic(induced_subgraph(graph, keep))) return component.empty() ? std::nullopt : std::optional(component.front());
    for (Vertex v : component) {
        VertexSet rest = keep;
        rest.erase(v);
        if (is_acyclic(induced_subgraph(graph, rest))) return v;
    }
    return std::nullopt;
}

bool entanglement_is_one(const Graph& graph) {
    if (is_acyclic(graph)) return false;
    for (const auto& comp : sccs(graph))
        if (!feedback_vertex(graph, comp)) return false;
    return true;
}

namespace {

/// Feedback vertex per vertex of `graph` for its non-trivial component, or
/// -1 where the component is trivial.
std::vector<std::int64_t> feedback_table(const Graph& graph) {
    std::vector<std::int64_t> table(graph.vertex_count(), -1);
    for (const auto& comp : sccs(graph)) {
        const bool trivial = comp.size() == 1 && !graph.has_edge(comp[0], comp[0]);
        if (trivial) continue;
        const auto fb = feedback_vertex(graph, comp);
        if (!fb) continue;
        for (Vertex v : comp) table[v] = *fb;
    }
    return table;
}

}  // namespace

CopStrategy one_cop_strategy(const Graph& graph) {
    const auto table = feedback_table(graph);
    const std::size_t n = graph.vertex_count();
    return [table, n](const VertexSet& cops, Vertex robber) {
        if (robber < table.size() && table[robber] == static_cast<std::int64_t>(robber)) {
            VertexSet next(n);
            next.insert(robber);
            return next;
        }
        return cops;
    };
}

CopStrategy ent_strategy_switch_all(int n) {
    const Graph g = gen_switch_all(n);
    const Vertex r = g.id("r"), s = g.id("s");
    VertexSet keep = g.all_vertices();
    keep.erase(r);
    keep.erase(s);
    const Graph inner = induced_subgraph(g, keep);

    // Lift the inner feedback table back to G_n ids.
    const auto inner_table = feedback_table(inner);
    std::vector<std::int64_t> table(g.vertex_count(), -1);
    for (Vertex v = 0; v < inner.vertex_count(); ++v)
        if (inner_table[v] >= 0)
            table[g.id(inner.name(v))] = g.id(inner.name(static_cast<Vertex>(inner_table[v])));

    return [table, r, s](const VertexSet& cops, Vertex robber) {
        VertexSet next = cops;
        if (robber == r || robber == s) {
            next.insert(robber);
            return next;
        }
        if (table[robber] == static_cast<std::int64_t>(robber)) {
            // The chasing cop is the one not parked on r or s.
            next.erase(r);
            next.erase(s);
            VertexSet moved = cops - next;
            moved.insert(robber);
            return moved;
        }
        return next;
    };
}

StrategyCheck verify_ent_strategy(const Graph& graph, const CopStrategy& strategy, int cops) {
    const std::size_t n = graph.vertex_count();
    StrategyCheck check;

    struct Key {
        VertexSet cops;
        Vertex robber;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.cops.hash() * 31 + k.robber; }
    };
    enum class Mark : std::uint8_t { OnPath, Done };
    std::unordered_map<Key, Mark, KeyHash> marks;

    auto describe = [&](const Key& k) {
        std::string s = "(C={";
        bool first = true;
        k.cops.for_each([&](Vertex v) {
            s += (first ? "" : ",") + graph.name(v);
            first = false;
        });
        return s + "}, robber=" + graph.name(k.robber) + ")";
    };
    auto legal = [&](const Key& k, const VertexSet& next) {
        if (next.universe() != n || next.size() > static_cast<std::size_t>(cops)) return false;
        if (next == k.cops) return true;
        VertexSet with = k.cops;
        with.insert(k.robber);
        if (next == with) return true;
        // one cop w != robber moves onto the robber's vertex
        if (!next.contains(k.robber) || k.cops.size() != next.size()) return false;
        const VertexSet left = k.cops - next;
        return left.size() == 1 && (next - k.cops) == VertexSet(n, {k.robber});
    };

    struct Frame {
        Key key;
        std::vector<Vertex> replies;
        VertexSet next;
        std::size_t pos = 0;
    };
    for (Vertex start = 0; start < n; ++start) {
        Key root{VertexSet(n), start};
        if (marks.contains(root)) continue;
        std::vector<Frame> stack;
        auto enter = [&](Key key) -> bool {
            VertexSet next = strategy(key.cops, key.robber);
            if (!legal(key, next)) {
                check.failure = "illegal cop move at " + describe(key);
                return false;
            }
            std::vector<Vertex> replies;
            for (Vertex w : graph.successors(key.robber))
                if (!next.contains(w)) replies.push_back(w);
            marks[key] = Mark::OnPath;
            ++check.positions;
            stack.push_back({std::move(key), std::move(replies), std::move(next)});
            return true;
        };
        if (!enter(root)) return check;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pos == f.replies.size()) {
                marks[f.key] = Mark::Done;
                stack.pop_back();
                continue;
            }
            Key child{f.next, f.replies[f.pos++]};
            const auto it = marks.find(child);
            if (it != marks.end()) {
                if (it->second == Mark::OnPath) {
                    check.failure = "robber can repeat position " + describe(child);
                    return check;
                }
                continue;
            }
            if (!enter(std::move(child))) return check;
        }
    }
    check.ok = true;
    return check;
}

}  // namespace dgw
