#include <optional>
#include <string>

#include "dgw/cliquewidth.hpp"
#include "dgw/errors.hpp"

namespace dgw::cw {

namespace {

std::string at(const char* p, int i) { return p + std::to_string(i); }

}  // namespace

// Layer invariant after layer i (c counts as t_0):
//   t_{2i}: T;  c and every other t_j, every d_j: RS (still owe edges to r, s)
//   a_j: A;  e_j, h_j: Done;  f_j: F;  g_j: G;  k_j: K
// r, s and x are produced last, so neither r nor s needs a colour of its own
// while the layers are built. Transients: D, Gnew, Knew.
Expr build_switch_all_expr(int n) {
    if (n < 1) throw InputError("switch-all parameter n must be >= 1");
    const Colour done{"Done"}, rs{"RS"}, a{"A"}, k{"K"}, g{"G"}, f{"F"}, t{"T"};
    const Colour d{"D"}, gnew{"Gnew"}, knew{"Knew"};

    Expr e = port(t, "c");
    for (int i = 1; i <= n; ++i) {
        for (int m = 2 * i - 1; m <= 2 * i; ++m) {
            // a_m -> t_m locally, then t_m -> t_{m-1} (or c)
            Expr pair = connect(a, d, disjoint_union(port(a, at("a", m)), port(d, at("t", m))));
            e = connect(d, t, disjoint_union(e, pair));
            e = recolour(d, t, recolour(t, rs, e));
        }

        // Layer gadget with a distinct colour per vertex for the local edges.
        Expr layer = union_all({port(d, at("d", i)), port(rs, at("e", i)), port(f, at("f", i)),
                                port(gnew, at("g", i)), port(a, at("h", i)), port(knew, at("k", i))});
        layer = connect(d, rs, layer);      // d -> e
        layer = connect(rs, d, layer);      // e -> d
        layer = connect(rs, a, layer);      // e -> h
        layer = connect(gnew, f, layer);    // g -> f
        layer = connect(gnew, knew, layer); // g -> k
        layer = connect(f, rs, layer);      // f -> e
        layer = connect(a, knew, layer);    // h -> k
        layer = recolour(a, done, recolour(rs, done, layer));

        e = disjoint_union(e, layer);
        e = connect(k, gnew, e);  // k_j -> g_i for j < i
        e = connect(d, a, e);     // d_i -> a_j for j <= 2i
        e = recolour(knew, k, recolour(gnew, g, recolour(d, rs, e)));
    }
    e = recolour(t, rs, e);

    e = connect(k, d, connect(d, d, disjoint_union(e, port(d, "x"))));
    e = connect(rs, gnew, connect(gnew, g, connect(gnew, d, disjoint_union(e, port(gnew, "r")))));
    e = connect(rs, knew, connect(knew, f, connect(knew, d, disjoint_union(e, port(knew, "s")))));
    return e;
}

// Layer invariant after layer i:
//   k_j: K;  A, c: Done;  d: D (still owe the edge to s);  b: B (owe t, k_*)
//   h_j^0 (j < i): H;  h_j^1 (j < i): Done;  h_i^0: Hl;  h_i^1: Hr
// Transients K' and C.
Expr build_zadeh_expr(int n) {
    if (n < 1) throw InputError("zadeh parameter n must be >= 1");
    const Colour done{"Done"}, k{"K"}, kp{"K'"}, c{"C"}, b{"B"}, d{"D"}, h{"H"}, hl{"Hl"}, hr{"Hr"};
    auto sup = [](const char* p, int i, int j) { return p + std::to_string(i) + "^" + std::to_string(j); };

    auto gadget = [&](int i, int j) {
        const std::string bi = "b" + std::to_string(i);
        Expr g = union_all({port(c, sup("c", i, j)), port(done, sup("A", i, j)), port(b, bi + ",0^" + std::to_string(j)),
                            port(b, bi + ",1^" + std::to_string(j)), port(d, sup("d", i, j)),
                            port(j == 0 ? hl : hr, sup("h", i, j))});
        g = connect(c, done, g);             // c -> A
        g = connect(done, d, g);             // A -> d
        g = connect(done, b, g);             // A -> b_*
        g = connect(b, done, g);             // b_* -> A
        return connect(d, j == 0 ? hl : hr, g);  // d -> h
    };

    std::optional<Expr> e;
    for (int i = 1; i <= n; ++i) {
        Expr top = port(kp, at("k", i));
        Expr acc = e ? disjoint_union(*e, top) : top;
        acc = connect(h, kp, acc);   // h_j^0 -> k_i for j <= i-2
        acc = connect(hr, kp, acc);  // h_{i-1}^1 -> k_i
        acc = recolour(hr, done, recolour(hl, h, acc));
        acc = connect(kp, k, connect(k, kp, acc));
        acc = disjoint_union(acc, disjoint_union(gadget(i, 0), gadget(i, 1)));
        acc = connect(kp, c, acc);  // k_i -> c_i^0, c_i^1
        e = recolour(c, done, recolour(kp, k, acc));
    }
    Expr acc = recolour(hl, h, *e);

    acc = disjoint_union(acc, port(kp, "s"));
    acc = connect(d, kp, connect(kp, k, acc));  // s -> k_*, d -> s
    acc = recolour(d, done, acc);

    acc = disjoint_union(acc, disjoint_union(port(c, at("k", n + 1)), port(d, "t")));
    acc = connect(hr, c, acc);  // h_n^1 -> k_{n+1}
    acc = connect(c, d, acc);   // k_{n+1} -> t
    acc = connect(d, d, acc);   // t -> t
    acc = connect(k, d, acc);
    acc = connect(b, k, acc);
    acc = connect(b, d, acc);
    acc = connect(kp, d, acc);  // s -> t
    return connect(h, d, acc);  // h_i^0 -> t
}

}  // namespace dgw::cw
