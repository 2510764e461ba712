#pragma once

#include "errors.hpp"
#include "multigraph.hpp"
#include "planarity.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <regex>
#include <sstream>
#include <string>

namespace xminor {

using json = nlohmann::json;

// ---- JSON ------------------------------------------------------------------

inline json to_json(const Multigraph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.id, e.u, e.v});
    return json{{"vertices", std::vector<VertexId>(g.vertices().begin(), g.vertices().end())}, {"edges", edges}};
}

inline Multigraph graph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
        !j["edges"].is_array())
        throw ParseError("graph JSON needs arrays \"vertices\" and \"edges\"", 0);
    Multigraph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw ParseError("vertex ids must be integers", 0);
        try {
            g.add_vertex(v.get<VertexId>());
        } catch (const GraphError& e) {
            throw ParseError(e.what(), 0);
        }
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer())
            throw ParseError("edges must be [id, u, v] integer triples", 0);
        try {
            g.add_edge_with_id(e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>());
        } catch (const GraphError& err) {
            throw ParseError(err.what(), 0);
        }
    }
    return g;
}

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

inline Multigraph graph_from_json_text(const std::string& text) { return graph_from_json(parse_json_text(text)); }

inline json to_json(const PlaneGraph& pg)
{
    json rot = json::object();
    for (const auto& [v, darts] : pg.rotation) {
        json list = json::array();
        for (Dart d : darts)
            list.push_back({d.edge, d.end});
        rot[std::to_string(v)] = list;
    }
    json outer = json::array();
    for (Dart d : outer_face(pg))
        outer.push_back({d.edge, d.end});
    return json{{"graph", to_json(pg.graph)}, {"rotation", rot}, {"outer_face", outer}};
}

inline PlaneGraph plane_graph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("graph") || !j.contains("rotation"))
        throw ParseError("plane graph JSON needs \"graph\" and \"rotation\"", 0);
    PlaneGraph pg{graph_from_json(j["graph"]), {}, std::nullopt};
    for (const auto& [key, list] : j["rotation"].items()) {
        auto& rot = pg.rotation[std::stoi(key)];
        for (const auto& d : list)
            rot.push_back(Dart{d.at(0).get<EdgeId>(), d.at(1).get<int>()});
    }
    if (j.contains("outer_face") && !j["outer_face"].empty()) {
        const auto& d = j["outer_face"][0];
        pg.outer = Dart{d.at(0).get<EdgeId>(), d.at(1).get<int>()};
    }
    if (!is_valid_embedding(pg))
        throw ParseError("rotation system is not a plane embedding of the graph", 0);
    return pg;
}

// ---- graph6 ----------------------------------------------------------------

/// graph6 encoding of a simple graph; vertices are taken in increasing id order.
inline std::string to_graph6(const Multigraph& g)
{
    if (!g.is_simple())
        throw GraphError("graph6 cannot represent loops or parallel edges");
    IndexedGraph ig(g);
    const long n = ig.num_vertices();
    if (n > 258047)
        throw GraphError("graph6 export supports at most 258047 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<char> adj(static_cast<std::size_t>(n * n), 0);
    for (int e = 0; e < ig.num_edges(); ++e) {
        auto [a, b] = ig.ends(e);
        adj[a * n + b] = adj[b * n + a] = 1;
    }
    int acc = 0, bits = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i * n + j];
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

/// Parses graph6; vertices become 0..n-1 and edges are numbered in
/// lexicographic order of their (smaller, larger) endpoint pairs.
inline Multigraph graph_from_graph6(const std::string& raw)
{
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    std::size_t pos = 0;
    if (s.rfind(">>graph6<<", 0) == 0)
        pos = 10;
    auto byte = [&](std::size_t p) {
        if (p >= s.size())
            throw ParseError("graph6 string ends early", p);
        const int c = static_cast<unsigned char>(s[p]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character", p);
        return c - 63;
    };
    long n = byte(pos);
    ++pos;
    if (n == 63) {
        if (pos < s.size() && s[pos] == '~')
            throw ParseError("graph6 orders above 258047 are not supported", pos);
        n = 0;
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | byte(pos++);
    }
    const long need = (n * (n - 1) / 2 + 5) / 6;
    if (static_cast<long>(s.size() - pos) != need)
        throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                             std::to_string(need),
                         pos);
    std::vector<std::pair<long, long>> pairs;
    long bit = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++bit) {
            const int chunk = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((chunk >> (5 - bit % 6)) & 1)
                pairs.emplace_back(i, j);
        }
    std::sort(pairs.begin(), pairs.end());
    Multigraph g = Multigraph::with_vertices(static_cast<int>(n));
    for (auto [i, j] : pairs)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

// ---- DOT -------------------------------------------------------------------

/// Undirected DOT with an `id` attribute on every edge so the export is lossless.
inline std::string to_dot(const Multigraph& g, const std::map<VertexId, std::string>& labels = {})
{
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v : g.vertices()) {
        os << "  " << v;
        if (auto it = labels.find(v); it != labels.end())
            os << " [label=\"" << it->second << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges())
        os << "  " << e.u << " -- " << e.v << " [id=" << e.id << "];\n";
    os << "}\n";
    return os.str();
}

/// Reads the DOT subset written by to_dot: integer node statements and
/// `a -- b` edge statements, optionally with an integer `id` attribute.
inline Multigraph graph_from_dot(const std::string& text)
{
    static const std::regex header(R"(^\s*(strict\s+)?graph\s*\w*\s*\{\s*$)");
    static const std::regex node(R"(^\s*(-?\d+)\s*(\[[^\]]*\])?\s*;?\s*$)");
    static const std::regex edge(R"(^\s*(-?\d+)\s*--\s*(-?\d+)\s*(\[([^\]]*)\])?\s*;?\s*$)");
    static const std::regex id_attr(R"re((^|[\s,])id\s*=\s*"?(-?\d+)"?)re");
    Multigraph g;
    std::vector<std::pair<std::size_t, std::array<long, 3>>> pending; // byte, (id or min, u, v)
    std::istringstream in(text);
    std::string line;
    std::size_t offset = 0;
    bool opened = false, closed = false;
    while (std::getline(in, line)) {
        const std::size_t at = offset;
        offset += line.size() + 1;
        std::smatch m;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line.compare(first, 2, "//") == 0)
            continue;
        if (!opened) {
            if (!std::regex_match(line, header))
                throw ParseError("expected 'graph {' header", at);
            opened = true;
            continue;
        }
        if (line.find('}') != std::string::npos && line.find_first_not_of(" \t\r}") == std::string::npos) {
            closed = true;
            break;
        }
        if (std::regex_match(line, m, edge)) {
            long id = -1;
            std::smatch im;
            const std::string attrs = m[4].str();
            if (std::regex_search(attrs, im, id_attr))
                id = std::stol(im[2].str());
            pending.push_back({at, {id, std::stol(m[1].str()), std::stol(m[2].str())}});
            continue;
        }
        if (std::regex_match(line, m, node)) {
            const VertexId v = std::stoi(m[1].str());
            if (!g.has_vertex(v))
                g.add_vertex(v);
            continue;
        }
        throw ParseError("unsupported DOT statement", at);
    }
    if (!opened || !closed)
        throw ParseError("DOT graph is not closed", offset);
    for (const auto& [at, p] : pending)
        for (long x : {p[1], p[2]})
            if (!g.has_vertex(static_cast<VertexId>(x)))
                g.add_vertex(static_cast<VertexId>(x));
    for (const auto& [at, p] : pending) {
        if (p[0] < 0)
            continue;
        try {
            g.add_edge_with_id(static_cast<EdgeId>(p[0]), static_cast<VertexId>(p[1]), static_cast<VertexId>(p[2]));
        } catch (const GraphError& e) {
            throw ParseError(e.what(), at);
        }
    }
    for (const auto& [at, p] : pending)
        if (p[0] < 0)
            g.add_edge(static_cast<VertexId>(p[1]), static_cast<VertexId>(p[2]));
    return g;
}

enum class GraphFormat { Json, Graph6, Dot };

inline GraphFormat parse_format(const std::string& name)
{
    if (name == "json")
        return GraphFormat::Json;
    if (name == "g6" || name == "graph6")
        return GraphFormat::Graph6;
    if (name == "dot")
        return GraphFormat::Dot;
    throw GraphError("unknown format " + name);
}

/// Guesses the format from content: JSON starts with '{', DOT with 'graph'.
inline Multigraph read_graph(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError("empty input", 0);
    if (text[first] == '{')
        return graph_from_json_text(text);
    if (text.compare(first, 5, "graph") == 0 || text.compare(first, 6, "strict") == 0)
        return graph_from_dot(text);
    return graph_from_graph6(text.substr(first));
}

inline std::string write_graph(const Multigraph& g, GraphFormat f)
{
    switch (f) {
    case GraphFormat::Json:
        return to_json(g).dump() + "\n";
    case GraphFormat::Graph6:
        return to_graph6(g) + "\n";
    case GraphFormat::Dot:
        return to_dot(g);
    }
    return {};
}

} // namespace xminor
