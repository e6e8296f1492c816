// Test-only reference implementations. Deliberately naive: std::set state,
// explicit position tables, no bit tricks, nothing shared with the library
// beyond Graph's adjacency accessors.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgw/graph.hpp"

namespace oracle {

using Set = std::set<int>;
using NamedEdges = std::set<std::pair<std::string, std::string>>;

// Switch-all successor table written out by hand for n = 1.
inline NamedEdges switch_all_g1_edges() {
    return {
        {"t1", "s"}, {"t1", "r"}, {"t1", "c"},
        {"t2", "s"}, {"t2", "r"}, {"t2", "t1"},
        {"a1", "t1"}, {"a2", "t2"},
        {"c", "s"}, {"c", "r"},
        {"d1", "s"}, {"d1", "r"}, {"d1", "e1"}, {"d1", "a1"}, {"d1", "a2"},
        {"e1", "d1"}, {"e1", "h1"},
        {"g1", "f1"}, {"g1", "k1"},
        {"k1", "x"},
        {"f1", "e1"},
        {"h1", "k1"},
        {"s", "x"}, {"s", "f1"},
        {"r", "x"}, {"r", "g1"},
        {"x", "x"},
    };
}

// Least-entered successor table written out by hand for n = 1 (no k self-loops,
// h^0 has no k successors because [3;1] is empty).
inline NamedEdges zadeh_z1_edges() {
    NamedEdges e;
    for (std::string j : {"0", "1"}) {
        const std::string c = "c1^" + j, a = "A1^" + j, d = "d1^" + j, h = "h1^" + j;
        const std::string b0 = "b1,0^" + j, b1 = "b1,1^" + j;
        e.insert({d, h});
        e.insert({d, "s"});
        e.insert({a, d});
        e.insert({a, b0});
        e.insert({a, b1});
        for (const auto& b : {b0, b1}) {
            e.insert({b, "t"});
            e.insert({b, a});
            e.insert({b, "k1"});
        }
        e.insert({c, a});
        e.insert({"k1", c});
    }
    e.insert({"t", "t"});
    e.insert({"s", "t"});
    e.insert({"s", "k1"});
    e.insert({"k2", "t"});
    e.insert({"k1", "t"});
    e.insert({"h1^0", "t"});
    e.insert({"h1^1", "k2"});
    return e;
}

inline NamedEdges named_edges(const dgw::Graph& g) {
    NamedEdges out;
    for (const auto& [u, w] : g.edges()) out.insert({g.name(u), g.name(w)});
    return out;
}

inline std::vector<int> succ(const dgw::Graph& g, int v, bool symmetric) {
    std::vector<int> out;
    for (auto w : g.successors(static_cast<dgw::Vertex>(v))) out.push_back(static_cast<int>(w));
    if (symmetric)
        for (auto w : g.predecessors(static_cast<dgw::Vertex>(v))) out.push_back(static_cast<int>(w));
    return out;
}

// Vertices reachable from `from` avoiding `blocked` (sources inside
// `blocked` contribute nothing).
inline Set reach(const dgw::Graph& g, const Set& blocked, const Set& from, bool symmetric = false) {
    Set seen;
    std::vector<int> stack;
    for (int v : from)
        if (!blocked.count(v) && seen.insert(v).second) stack.push_back(v);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : succ(g, v, symmetric))
            if (!blocked.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen;
}

inline Set set_minus(Set a, const Set& b) {
    for (int v : b) a.erase(v);
    return a;
}

inline Set intersect(const Set& a, const Set& b) {
    Set out;
    for (int v : a)
        if (b.count(v)) out.insert(v);
    return out;
}

inline std::vector<Set> subsets_up_to(int n, int k) {
    std::vector<Set> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Set s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        if (static_cast<int>(s.size()) <= k) out.push_back(s);
    }
    return out;
}

// Visible game (TW if symmetric, else DAGW), unrestricted cop moves, solved
// by iterating "cops can force a win from here" to a fixpoint.
inline bool visible_cops_win(const dgw::Graph& g, int k, bool monotone, bool symmetric) {
    const int n = static_cast<int>(g.vertex_count());
    const auto placements = subsets_up_to(n, k);
    std::set<std::pair<Set, int>> win;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Set& c : placements)
            for (int v = 0; v < n; ++v) {
                if (c.count(v) || win.count({c, v})) continue;
                for (const Set& next : placements) {
                    const Set stay = intersect(c, next);
                    const Set r = reach(g, stay, {v}, symmetric);
                    if (monotone && !intersect(r, set_minus(c, next)).empty()) continue;
                    bool all = true;
                    for (int w : set_minus(r, next))
                        if (!win.count({next, w})) {
                            all = false;
                            break;
                        }
                    if (all) {
                        win.insert({c, v});
                        changed = true;
                        break;
                    }
                }
            }
    }
    for (int v = 0; v < n; ++v)
        if (!win.count({Set{}, v})) return false;
    return true;
}

// Invisible games with the library's move set (place one cop or lift one
// cop), breadth-first from (∅, V). Strict monotonicity: R' ⊆ R.
inline bool invisible_cops_win(const dgw::Graph& g, int k, bool inert, bool monotone) {
    const int n = static_cast<int>(g.vertex_count());
    Set all;
    for (int v = 0; v < n; ++v) all.insert(v);
    std::set<std::pair<Set, Set>> seen{{Set{}, all}};
    std::queue<std::pair<Set, Set>> todo;
    todo.push({Set{}, all});
    if (all.empty()) return true;
    while (!todo.empty()) {
        auto [c, r] = todo.front();
        todo.pop();
        std::vector<Set> moves;
        for (int v : c) moves.push_back(set_minus(c, {v}));
        if (static_cast<int>(c.size()) < k)
            for (int v = 0; v < n; ++v)
                if (!c.count(v)) {
                    Set next = c;
                    next.insert(v);
                    moves.push_back(next);
                }
        for (const Set& next : moves) {
            const Set stay = intersect(c, next);
            Set r2;
            if (inert) {
                r2 = r;
                for (int v : reach(g, stay, intersect(r, next))) r2.insert(v);
                r2 = set_minus(r2, next);
            } else {
                r2 = set_minus(reach(g, stay, r), next);
            }
            if (monotone && !set_minus(r2, r).empty()) continue;
            if (r2.empty()) return true;
            if (seen.insert({next, r2}).second) todo.push({next, r2});
        }
    }
    return false;
}

// Entanglement game, fixpoint over cop-to-move positions (C, v).
inline bool entanglement_cops_win(const dgw::Graph& g, int k) {
    const int n = static_cast<int>(g.vertex_count());
    const auto placements = subsets_up_to(n, k);
    std::set<std::pair<Set, int>> win;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Set& c : placements)
            for (int v = 0; v < n; ++v) {
                if (c.count(v) || win.count({c, v})) continue;
                std::vector<Set> moves{c};
                Set with_v = c;
                with_v.insert(v);
                if (static_cast<int>(with_v.size()) <= k) moves.push_back(with_v);
                for (int w : c) moves.push_back(set_minus(with_v, {w}));
                for (const Set& next : moves) {
                    bool all = true;
                    for (int w : succ(g, v, false))
                        if (!next.count(w) && !win.count({next, w})) {
                            all = false;
                            break;
                        }
                    if (all) {
                        win.insert({c, v});
                        changed = true;
                        break;
                    }
                }
            }
    }
    for (int v = 0; v < n; ++v)
        if (!win.count({Set{}, v})) return false;
    return true;
}

inline int least_cops(const dgw::Graph& g, const std::function<bool(int)>& wins) {
    for (int k = 0;; ++k)
        if (wins(k)) return k;
}

}  // namespace oracle
