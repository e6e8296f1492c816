#include "dgw/cliquewidth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dgw/errors.hpp"

namespace dgw::cw {

Expr port(Colour colour, std::string name) {
    return Expr(std::make_shared<const Expr::Node>(PortNode{std::move(colour), std::move(name)}));
}

Expr disjoint_union(Expr left, Expr right) {
    return Expr(std::make_shared<const Expr::Node>(UnionNode{std::move(left), std::move(right)}));
}

Expr recolour(Colour from, Colour to, Expr child) {
    return Expr(std::make_shared<const Expr::Node>(RecolourNode{std::move(from), std::move(to), std::move(child)}));
}

Expr connect(Colour from, Colour to, Expr child) {
    return Expr(std::make_shared<const Expr::Node>(ConnectNode{std::move(from), std::move(to), std::move(child)}));
}

Expr union_all(const std::vector<Expr>& parts) {
    if (parts.empty()) throw InputError("union_all needs at least one expression");
    Expr acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, parts[i]);
    return acc;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Evaluation state: vertices are appended in port order, so every subtree
/// owns a contiguous id range.
struct Evaluator {
    std::vector<std::string> names;
    std::vector<Colour> colours;
    std::vector<Edge> edges;

    void run(const Expr& e) {
        std::visit(overloaded{
                       [&](const PortNode& p) {
                           names.push_back(p.name);
                           colours.push_back(p.colour);
                       },
                       [&](const UnionNode& u) {
                           run(u.left);
                           run(u.right);
                       },
                       [&](const RecolourNode& r) {
                           const std::size_t lo = names.size();
                           run(r.child);
                           for (std::size_t v = lo; v < names.size(); ++v)
                               if (colours[v] == r.from) colours[v] = r.to;
                       },
                       [&](const ConnectNode& c) {
                           const std::size_t lo = names.size();
                           run(c.child);
                           std::vector<Vertex> from, to;
                           for (std::size_t v = lo; v < names.size(); ++v) {
                               if (colours[v] == c.from) from.push_back(static_cast<Vertex>(v));
                               if (colours[v] == c.to) to.push_back(static_cast<Vertex>(v));
                           }
                           for (Vertex a : from)
                               for (Vertex b : to) edges.emplace_back(a, b);
                       },
                   },
                   e.node());
    }
};

void collect_colours(const Expr& e, std::set<std::string>& out) {
    std::visit(overloaded{
                   [&](const PortNode& p) { out.insert(p.colour.label); },
                   [&](const UnionNode& u) {
                       collect_colours(u.left, out);
                       collect_colours(u.right, out);
                   },
                   [&](const RecolourNode& r) {
                       out.insert(r.from.label);
                       out.insert(r.to.label);
                       collect_colours(r.child, out);
                   },
                   [&](const ConnectNode& c) {
                       out.insert(c.from.label);
                       out.insert(c.to.label);
                       collect_colours(c.child, out);
                   },
               },
               e.node());
}

void print(const Expr& e, int depth, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    std::visit(overloaded{
                   [&](const PortNode& p) { out << pad << "(port " << p.colour.label << ' ' << p.name << ')'; },
                   [&](const UnionNode& u) {
                       out << pad << "(union\n";
                       print(u.left, depth + 1, out);
                       out << '\n';
                       print(u.right, depth + 1, out);
                       out << ')';
                   },
                   [&](const RecolourNode& r) {
                       out << pad << "(recolour " << r.from.label << ' ' << r.to.label << '\n';
                       print(r.child, depth + 1, out);
                       out << ')';
                   },
                   [&](const ConnectNode& c) {
                       out << pad << "(connect " << c.from.label << ' ' << c.to.label << '\n';
                       print(c.child, depth + 1, out);
                       out << ')';
                   },
               },
               e.node());
}

class SexprParser {
public:
    explicit SexprParser(std::string_view text) : text_(text) {}

    Expr parse_all() {
        Expr e = parse();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("s-expression, offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string atom() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')')
            ++pos_;
        if (pos_ == start) fail("expected an atom");
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr parse() {
        expect('(');
        const std::string op = atom();
        Expr result = [&] {
            if (op == "port") {
                Colour c{atom()};
                return port(std::move(c), atom());
            }
            if (op == "union") {
                Expr left = parse();
                return disjoint_union(std::move(left), parse());
            }
            if (op == "recolour" || op == "connect") {
                Colour from{atom()};
                Colour to{atom()};
                Expr child = parse();
                return op == "recolour" ? recolour(std::move(from), std::move(to), std::move(child))
                                        : connect(std::move(from), std::move(to), std::move(child));
            }
            fail("unknown operator \"" + op + "\"");
        }();
        expect(')');
        return result;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LabelledGraph eval(const Expr& expr) {
    Evaluator ev;
    ev.run(expr);
    return {Graph(std::move(ev.names), std::move(ev.edges)), std::move(ev.colours)};
}

std::size_t colours_used(const Expr& expr) {
    std::set<std::string> seen;
    collect_colours(expr, seen);
    return seen.size();
}

std::size_t node_count(const Expr& expr) {
    return std::visit(overloaded{
                          [](const PortNode&) -> std::size_t { return 1; },
                          [](const UnionNode& u) { return 1 + node_count(u.left) + node_count(u.right); },
                          [](const RecolourNode& r) { return 1 + node_count(r.child); },
                          [](const ConnectNode& c) { return 1 + node_count(c.child); },
                      },
                      expr.node());
}

std::string to_sexpr(const Expr& expr) {
    std::ostringstream out;
    print(expr, 0, out);
    out << '\n';
    return out.str();
}

Expr parse_sexpr(std::string_view text) { return SexprParser(text).parse_all(); }

VerifyReport verify_expr(const Graph& graph, const Expr& expr) {
    VerifyReport report;
    report.colour_count = colours_used(expr);
    const LabelledGraph built = eval(expr);
    const Graph& h = built.graph;

    std::set<std::pair<std::string, std::string>> want, got;
    for (const auto& [a, b] : graph.edges()) want.emplace(graph.name(a), graph.name(b));
    for (const auto& [a, b] : h.edges()) got.emplace(h.name(a), h.name(b));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(report.missing_edges));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(report.extra_edges));
    for (const auto& name : h.names())
        if (!graph.find(name)) report.unknown_names.push_back(name);
    for (const auto& name : graph.names())
        if (!h.find(name)) report.missing_vertices.push_back(name);
    report.equal = report.missing_edges.empty() && report.extra_edges.empty() && report.unknown_names.empty() &&
                   report.missing_vertices.empty();
    return report;
}

VerifyReport verify_family_expr(Family family, int n) {
    switch (family) {
        case Family::SwitchAll: return verify_expr(gen_switch_all(n), build_switch_all_expr(n));
        case Family::Zadeh: return verify_expr(gen_zadeh(n), build_zadeh_expr(n));
        default: throw InputError("cliquewidth builders exist for switch-all and zadeh only");
    }
}

}  // namespace dgw::cw
