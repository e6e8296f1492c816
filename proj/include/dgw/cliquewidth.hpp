#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dgw/families.hpp"
#include "dgw/graph.hpp"

namespace dgw::cw {

/// Vertex label of the cliquewidth calculus.
struct Colour {
    std::string label;
    friend auto operator<=>(const Colour&, const Colour&) = default;
};

struct PortNode;
struct UnionNode;
struct RecolourNode;
struct ConnectNode;

/// Immutable cliquewidth expression. Subtrees are shared, so copying is cheap.
class Expr {
public:
    using Node = std::variant<PortNode, UnionNode, RecolourNode, ConnectNode>;

    const Node& node() const;

    friend Expr port(Colour colour, std::string name);
    friend Expr disjoint_union(Expr left, Expr right);
    friend Expr recolour(Colour from, Colour to, Expr child);
    friend Expr connect(Colour from, Colour to, Expr child);

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct PortNode {
    Colour colour;
    std::string name;
};
struct UnionNode {
    Expr left, right;
};
struct RecolourNode {
    Colour from, to;
    Expr child;
};
struct ConnectNode {
    Colour from, to;
    Expr child;
};

inline const Expr::Node& Expr::node() const { return *node_; }

/// A single `colour`-port named `name`.
Expr port(Colour colour, std::string name);
Expr disjoint_union(Expr left, Expr right);
/// Every `from`-port becomes a `to`-port.
Expr recolour(Colour from, Colour to, Expr child);
/// Adds every edge (v, w) with colour(v) = from and colour(w) = to. With
/// from == to this includes the self-loops (v, v).
Expr connect(Colour from, Colour to, Expr child);

/// Folds a non-empty list of expressions with disjoint_union, left to right.
Expr union_all(const std::vector<Expr>& parts);

struct LabelledGraph {
    Graph graph;
    std::vector<Colour> colours;  ///< indexed by vertex id
};

/// Evaluates the expression. Vertex ids follow the left-to-right order of
/// the ports; names are the ports' names. Throws InputError on duplicate
/// port names.
LabelledGraph eval(const Expr& expr);

/// Number of distinct colour labels mentioned anywhere in the tree.
std::size_t colours_used(const Expr& expr);

/// Number of nodes in the tree.
std::size_t node_count(const Expr& expr);

/// S-expression text, one operator per line, two-space indentation:
///   (port A u)  (union E1 E2)  (recolour A B E)  (connect A B E)
std::string to_sexpr(const Expr& expr);
/// Inverse of to_sexpr; any whitespace layout is accepted.
Expr parse_sexpr(std::string_view text);

/// Builds gen_switch_all(n) with ten colours.
Expr build_switch_all_expr(int n);
/// Builds gen_zadeh(n) with nine colours.
Expr build_zadeh_expr(int n);

struct VerifyReport {
    bool equal = false;
    std::size_t colour_count = 0;
    std::vector<std::pair<std::string, std::string>> missing_edges;  ///< in graph, not in expression
    std::vector<std::pair<std::string, std::string>> extra_edges;    ///< in expression, not in graph
    std::vector<std::string> unknown_names;    ///< produced by the expression, absent from graph
    std::vector<std::string> missing_vertices; ///< in graph, never produced
};

/// Compares eval(expr) with `graph`, matching vertices by name.
VerifyReport verify_expr(const Graph& graph, const Expr& expr);

/// verify_expr(generator(n), builder(n)) for SwitchAll or Zadeh.
VerifyReport verify_family_expr(Family family, int n);

}  // namespace dgw::cw
