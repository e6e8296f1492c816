#include "dgw/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dgw/errors.hpp"

namespace dgw {

std::string serialize_graph(const Graph& graph) {
    nlohmann::ordered_json doc;
    auto vertices = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        nlohmann::ordered_json item;
        item["id"] = v;
        item["name"] = graph.name(v);
        vertices.push_back(std::move(item));
    }
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump();
}

Graph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing \"edges\" array");

    const auto& vertices = doc["vertices"];
    const std::size_t n = vertices.size();
    std::vector<std::string> names(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& item = vertices[i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!item.is_object() || !item.contains("id") || !item.contains("name"))
            throw ParseError(where + ": expected {\"id\":<int>,\"name\":<string>}");
        if (!item["id"].is_number_unsigned() || !item["name"].is_string())
            throw ParseError(where + ": id must be a non-negative integer and name a string");
        const auto id = item["id"].get<std::uint64_t>();
        if (id >= n) throw ParseError(where + ": id " + std::to_string(id) + " is not dense in 0.." + std::to_string(n - 1));
        if (seen[id]) throw ParseError(where + ": duplicate id " + std::to_string(id));
        seen[id] = true;
        names[id] = item["name"].get<std::string>();
    }

    std::vector<Edge> edges;
    const auto& list = doc["edges"];
    edges.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& e = list[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError(where + ": expected [<from>,<to>]");
        const auto a = e[0].get<std::uint64_t>();
        const auto b = e[1].get<std::uint64_t>();
        if (a >= n || b >= n)
            throw ParseError(where + ": dangling endpoint [" + std::to_string(a) + "," + std::to_string(b) + "]");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    try {
        return Graph(std::move(names), std::move(edges));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const Graph& graph) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        out << "  n" << v << " [label=" << dot_quote(graph.name(v)) << "];\n";
    for (const auto& [a, b] : graph.edges()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace dgw
