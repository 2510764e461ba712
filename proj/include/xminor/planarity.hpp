#pragma once

#include "cycles.hpp"
#include "errors.hpp"
#include "multigraph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace xminor {

/// One end of an edge, oriented away from the vertex it sits at.
/// end == 0 leaves from edge.u, end == 1 leaves from edge.v.
struct Dart {
    EdgeId edge;
    int end;

    Dart twin() const { return Dart{edge, 1 - end}; }
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

inline VertexId dart_tail(const Multigraph& g, Dart d)
{
    const Edge& e = g.edge(d.edge);
    return d.end == 0 ? e.u : e.v;
}

/// Multigraph plus a rotation system and a designated outer face. Faces are
/// traced by next(d) = successor of twin(d) in the rotation at head(d).
struct PlaneGraph {
    Multigraph graph;
    std::map<VertexId, std::vector<Dart>> rotation;
    std::optional<Dart> outer; // a dart on the outer face; empty for edgeless graphs
};

/// Face walks of a plane graph, with a dart -> face lookup.
class FaceSet {
public:
    explicit FaceSet(const PlaneGraph& pg)
    {
        for (const auto& [v, rot] : pg.rotation)
            for (std::size_t i = 0; i < rot.size(); ++i)
                succ_[rot[i]] = rot[(i + 1) % rot.size()];
        for (const Edge& e : pg.graph.edges())
            for (int end = 0; end < 2; ++end)
                if (!succ_.count(Dart{e.id, end}))
                    throw GraphError("rotation misses an end of edge " + std::to_string(e.id));
        for (const auto& [d, _] : succ_) {
            if (face_of_.count(d))
                continue;
            const int f = static_cast<int>(faces_.size());
            faces_.emplace_back();
            Dart x = d;
            do {
                faces_[f].push_back(x);
                face_of_[x] = f;
                x = succ_.at(x.twin());
            } while (x != d);
        }
    }

    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    int face_of(Dart d) const { return face_of_.at(d); }

    std::vector<EdgeId> face_edges(int f) const
    {
        std::vector<EdgeId> out;
        for (Dart d : faces_[f])
            out.push_back(d.edge);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    std::map<Dart, Dart> succ_;
    std::map<Dart, int> face_of_;
    std::vector<std::vector<Dart>> faces_;
};

inline std::vector<std::vector<Dart>> faces(const PlaneGraph& pg) { return FaceSet(pg).faces(); }

/// Rotation is a permutation of each vertex's darts and every component has
/// Euler characteristic 2 (an isolated vertex counts one face).
inline bool is_valid_embedding(const PlaneGraph& pg)
{
    const Multigraph& g = pg.graph;
    for (VertexId v : g.vertices()) {
        std::vector<Dart> expect;
        for (const Edge& e : g.edges()) {
            if (e.u == v)
                expect.push_back({e.id, 0});
            if (e.v == v)
                expect.push_back({e.id, 1});
        }
        auto it = pg.rotation.find(v);
        std::vector<Dart> have = it == pg.rotation.end() ? std::vector<Dart>{} : it->second;
        std::sort(expect.begin(), expect.end());
        std::sort(have.begin(), have.end());
        if (have != expect)
            return false;
    }
    if (pg.rotation.size() != g.num_vertices())
        return false;
    FaceSet fs(pg);
    std::map<VertexId, int> comp_of;
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
            comp_of[v] = static_cast<int>(c);
    std::vector<long> chi(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        chi[c] += static_cast<long>(comps[c].size());
    for (const Edge& e : g.edges())
        chi[comp_of[e.u]] -= 1;
    std::vector<int> face_count(comps.size(), 0);
    for (const auto& f : fs.faces())
        ++face_count[comp_of[dart_tail(g, f.front())]];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int f = comps[c].size() == 1 && face_count[c] == 0 ? 1 : face_count[c];
        if (chi[c] + f != 2)
            return false;
    }
    if (pg.outer && !g.has_edge(pg.outer->edge))
        return false;
    return true;
}

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

struct SimpleView {
    BoostGraph bg;
    std::vector<std::vector<int>> classes; // parallel class -> dense edge indices (non-loop)
};

inline SimpleView simple_view(const IndexedGraph& ig)
{
    SimpleView sv{BoostGraph(ig.num_vertices()), {}};
    std::map<std::pair<int, int>, int> cls;
    for (int e = 0; e < ig.num_edges(); ++e) {
        auto [a, b] = ig.ends(e);
        if (a == b)
            continue;
        const auto key = std::minmax(a, b);
        auto it = cls.find(key);
        if (it == cls.end()) {
            const int c = static_cast<int>(sv.classes.size());
            cls.emplace(key, c);
            sv.classes.push_back({e});
            auto [be, ok] = boost::add_edge(key.first, key.second, sv.bg);
            (void)ok;
            boost::put(boost::edge_index, sv.bg, be, c);
        } else {
            sv.classes[it->second].push_back(e);
        }
    }
    return sv;
}

inline bool exceeds_euler_bound(const SimpleView& sv, int n)
{
    const auto m = static_cast<long>(sv.classes.size());
    return n >= 3 && m > 3L * n - 6;
}

} // namespace detail

inline bool is_planar(const Multigraph& g)
{
    IndexedGraph ig(g);
    auto sv = detail::simple_view(ig);
    if (detail::exceeds_euler_bound(sv, ig.num_vertices()))
        return false;
    return boost::boyer_myrvold_planarity_test(sv.bg);
}

/// A planar embedding, or nullopt. Parallel edges are placed consecutively
/// (forming faces of length two) and loops bound faces of length one. The
/// longest face is designated as outer.
inline std::optional<PlaneGraph> planar_embedding(const Multigraph& g)
{
    IndexedGraph ig(g);
    auto sv = detail::simple_view(ig);
    const int n = ig.num_vertices();
    if (detail::exceeds_euler_bound(sv, n))
        return std::nullopt;
    using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(n);
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = sv.bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, sv.bg)));
    if (!planar)
        return std::nullopt;

    PlaneGraph pg{g, {}, std::nullopt};
    for (int v = 0; v < n; ++v) {
        auto& rot = pg.rotation[ig.vertex_id(v)];
        for (const EdgeDesc& be : emb[v]) {
            const int c = boost::get(boost::edge_index, sv.bg, be);
            const auto& members = sv.classes[c];
            auto [a, b] = ig.ends(members.front());
            const int lo = std::min(a, b);
            auto dart_at = [&](int e) {
                auto [x, y] = ig.ends(e);
                (void)y;
                return Dart{ig.edge_id(e), x == v ? 0 : 1};
            };
            if (v == lo)
                for (int e : members)
                    rot.push_back(dart_at(e));
            else
                for (auto it = members.rbegin(); it != members.rend(); ++it)
                    rot.push_back(dart_at(*it));
        }
        for (const auto& arc : ig.arcs(v)) {
            auto [a, b] = ig.ends(arc.edge);
            if (a != b || a != v)
                continue;
            const Dart d0{ig.edge_id(arc.edge), 0};
            if (std::find(rot.begin(), rot.end(), d0) != rot.end())
                continue;
            rot.push_back(Dart{ig.edge_id(arc.edge), 1});
            rot.push_back(d0);
        }
    }
    if (g.num_edges() > 0) {
        FaceSet fs(pg);
        std::size_t best = 0;
        for (std::size_t f = 1; f < fs.faces().size(); ++f)
            if (fs.faces()[f].size() > fs.faces()[best].size())
                best = f;
        pg.outer = *std::min_element(fs.faces()[best].begin(), fs.faces()[best].end());
    }
    return pg;
}

/// Embedding with every boundary vertex on the outer face, or nullopt.
/// G embeds in a disk with S on the boundary iff G plus a new vertex adjacent
/// to all of S is planar; the apex is deleted and its merged face becomes outer.
inline std::optional<PlaneGraph> disk_embeddable(const Multigraph& g, const std::vector<VertexId>& boundary)
{
    if (boundary.size() > 3)
        throw GraphError("disk_embeddable supports at most three boundary vertices");
    for (VertexId v : boundary)
        g.require_vertex(v);
    {
        auto b = boundary;
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw GraphError("boundary vertices must be distinct");
    }
    if (boundary.empty())
        return planar_embedding(g);
    Multigraph aug = g;
    const VertexId apex = aug.add_vertex();
    std::vector<EdgeId> spokes;
    for (VertexId v : boundary)
        spokes.push_back(aug.add_edge(apex, v));
    auto pg = planar_embedding(aug);
    if (!pg)
        return std::nullopt;

    PlaneGraph out{g, {}, std::nullopt};
    auto is_spoke = [&](Dart d) { return std::find(spokes.begin(), spokes.end(), d.edge) != spokes.end(); };
    for (VertexId v : g.vertices()) {
        const auto& rot = pg->rotation.at(v);
        std::vector<Dart> kept;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (!is_spoke(rot[i])) {
                kept.push_back(rot[i]);
                continue;
            }
            if (!out.outer) {
                for (std::size_t k = 1; k < rot.size(); ++k) {
                    const Dart nxt = rot[(i + k) % rot.size()];
                    if (!is_spoke(nxt)) {
                        out.outer = nxt;
                        break;
                    }
                }
            }
        }
        out.rotation[v] = std::move(kept);
    }
    if (!out.outer && g.num_edges() > 0)
        out.outer = Dart{g.edges().front().id, 0};
    return out;
}

/// Face containing the designated outer dart.
inline std::vector<Dart> outer_face(const PlaneGraph& pg)
{
    if (!pg.outer)
        return {};
    FaceSet fs(pg);
    return fs.faces()[fs.face_of(*pg.outer)];
}

/// Vertices incident with the outer face (isolated vertices included).
inline std::vector<VertexId> outer_face_vertices(const PlaneGraph& pg)
{
    std::vector<VertexId> out;
    for (Dart d : outer_face(pg))
        out.push_back(dart_tail(pg.graph, d));
    for (VertexId v : pg.graph.vertices())
        if (pg.rotation.count(v) && pg.rotation.at(v).empty())
            out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Re-designates the outer face as a face whose edge set equals `face_edges`.
/// Returns false (leaving pg untouched) if no such face exists.
inline bool set_outer_face(PlaneGraph& pg, std::vector<EdgeId> face_edges)
{
    std::sort(face_edges.begin(), face_edges.end());
    FaceSet fs(pg);
    for (std::size_t f = 0; f < fs.faces().size(); ++f)
        if (fs.face_edges(static_cast<int>(f)) == face_edges) {
            pg.outer = *std::min_element(fs.faces()[f].begin(), fs.faces()[f].end());
            return true;
        }
    return false;
}

/// True iff the edge set of C equals the edge set of some face.
inline bool is_facial(const PlaneGraph& pg, const std::vector<EdgeId>& cycle)
{
    auto c = require_cycle(pg.graph, cycle).edges;
    std::sort(c.begin(), c.end());
    FaceSet fs(pg);
    for (std::size_t f = 0; f < fs.faces().size(); ++f)
        if (fs.face_edges(static_cast<int>(f)) == c)
            return true;
    return false;
}

/// ins(C): the edges embedded in the open disk bounded by C.
struct CycleInterior {
    CycleWalk cycle;
    std::vector<EdgeId> inside_edges;      // sorted
    std::vector<VertexId> inside_vertices; // sorted; vertices not on C incident with inside edges
};

/// Faces reachable from the outer face in the dual without crossing C lie
/// outside; every other face lies inside. An edge off C is inside iff its faces are.
inline CycleInterior interior_edges(const PlaneGraph& pg, const std::vector<EdgeId>& cycle)
{
    const Multigraph& g = pg.graph;
    CycleInterior out{require_cycle(g, cycle), {}, {}};
    if (!pg.outer)
        throw GraphError("plane graph has no outer face");
    {
        const auto comps = components(g);
        const VertexId on_c = out.cycle.vertices.front();
        const VertexId on_outer = dart_tail(g, *pg.outer);
        for (const auto& comp : comps)
            if (std::binary_search(comp.begin(), comp.end(), on_c) &&
                !std::binary_search(comp.begin(), comp.end(), on_outer))
                throw GraphError("interior_edges: outer face lies in another component than the cycle");
    }
    FaceSet fs(pg);
    std::set<EdgeId> on_cycle(out.cycle.edges.begin(), out.cycle.edges.end());
    std::vector<char> reached(fs.faces().size(), 0);
    std::deque<int> q{fs.face_of(*pg.outer)};
    reached[q.front()] = 1;
    while (!q.empty()) {
        const int f = q.front();
        q.pop_front();
        for (Dart d : fs.faces()[f]) {
            if (on_cycle.count(d.edge))
                continue;
            const int h = fs.face_of(d.twin());
            if (!reached[h]) {
                reached[h] = 1;
                q.push_back(h);
            }
        }
    }
    std::set<VertexId> on_c(out.cycle.vertices.begin(), out.cycle.vertices.end());
    std::set<VertexId> inside_v;
    for (const Edge& e : g.edges()) {
        if (on_cycle.count(e.id))
            continue;
        if (!reached[fs.face_of(Dart{e.id, 0})]) {
            out.inside_edges.push_back(e.id);
            for (VertexId x : {e.u, e.v})
                if (!on_c.count(x))
                    inside_v.insert(x);
        }
    }
    out.inside_vertices.assign(inside_v.begin(), inside_v.end());
    return out;
}

/// C is induced and G minus V(C) is connected (an empty remainder counts).
inline bool is_peripheral(const Multigraph& g, const std::vector<EdgeId>& cycle)
{
    const auto c = require_cycle(g, cycle);
    std::set<VertexId> vs(c.vertices.begin(), c.vertices.end());
    std::set<EdgeId> es(c.edges.begin(), c.edges.end());
    for (const Edge& e : g.edges())
        if (!es.count(e.id) && vs.count(e.u) && vs.count(e.v))
            return false;
    std::vector<VertexId> drop(vs.begin(), vs.end());
    return is_connected(delete_vertices(g, drop));
}

} // namespace xminor
