#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xminor {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    bool is_loop() const noexcept { return u == v; }
    bool has_end(VertexId x) const noexcept { return u == x || v == x; }
    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite graph with loops and parallel edges. Vertex and edge ids are stable:
/// deleting elements never renumbers the survivors.
class Multigraph {
public:
    Multigraph() = default;

    /// Graph on vertices 0..n-1 and no edges.
    static Multigraph with_vertices(int n)
    {
        Multigraph g;
        for (int i = 0; i < n; ++i)
            g.add_vertex();
        return g;
    }

    VertexId add_vertex() { return add_vertex(next_vertex_); }

    VertexId add_vertex(VertexId id)
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
        if (it != vertices_.end() && *it == id)
            throw GraphError("duplicate vertex id " + std::to_string(id));
        vertices_.insert(it, id);
        next_vertex_ = std::max(next_vertex_, id + 1);
        return id;
    }

    EdgeId add_edge(VertexId u, VertexId v) { return add_edge_with_id(next_edge_, u, v); }

    EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v)
    {
        require_vertex(u);
        require_vertex(v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        if (it != edges_.end() && it->id == id)
            throw GraphError("duplicate edge id " + std::to_string(id));
        edges_.insert(it, Edge{id, u, v});
        next_edge_ = std::max(next_edge_, id + 1);
        return id;
    }

    void remove_edge(EdgeId id)
    {
        auto it = find_edge(id);
        if (it == edges_.end())
            throw GraphError("unknown edge id " + std::to_string(id));
        edges_.erase(it);
    }

    /// Removes the vertex together with every incident edge.
    void remove_vertex(VertexId id)
    {
        require_vertex(id);
        vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), id));
        std::erase_if(edges_, [id](const Edge& e) { return e.has_end(id); });
    }

    bool has_vertex(VertexId id) const
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), id);
    }

    bool has_edge(EdgeId id) const { return find_edge(id) != edges_.end(); }

    const Edge& edge(EdgeId id) const
    {
        auto it = find_edge(id);
        if (it == edges_.end())
            throw GraphError("unknown edge id " + std::to_string(id));
        return *it;
    }

    void require_vertex(VertexId id) const
    {
        if (!has_vertex(id))
            throw GraphError("unknown vertex id " + std::to_string(id));
    }

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    /// Raw degree: a loop contributes two.
    int degree(VertexId v) const
    {
        require_vertex(v);
        int d = 0;
        for (const Edge& e : edges_)
            d += (e.u == v) + (e.v == v);
        return d;
    }

    std::vector<EdgeId> incident_edges(VertexId v) const
    {
        std::vector<EdgeId> out;
        for (const Edge& e : edges_)
            if (e.has_end(v))
                out.push_back(e.id);
        return out;
    }

    /// Distinct neighbors other than v itself.
    std::vector<VertexId> neighbors(VertexId v) const
    {
        std::vector<VertexId> out;
        for (const Edge& e : edges_)
            if (e.has_end(v) && !e.is_loop())
                out.push_back(e.other(v));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    VertexId next_vertex_id() const noexcept { return next_vertex_; }
    EdgeId next_edge_id() const noexcept { return next_edge_; }

    bool has_loops() const
    {
        return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
    }

    bool is_simple() const
    {
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const Edge& e : edges_) {
            if (e.is_loop())
                return false;
            if (!seen.insert(std::minmax(e.u, e.v)).second)
                return false;
        }
        return true;
    }

    friend bool operator==(const Multigraph& a, const Multigraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge>::const_iterator find_edge(EdgeId id) const
    {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        return (it != edges_.end() && it->id == id) ? it : edges_.end();
    }

    std::vector<Edge>::iterator find_edge(EdgeId id)
    {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        return (it != edges_.end() && it->id == id) ? it : edges_.end();
    }

    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
};

/// Dense 0..n-1 view of a Multigraph used by the search kernels.
class IndexedGraph {
public:
    struct Arc {
        int edge; // dense edge index
        int to;   // dense vertex index
    };

    explicit IndexedGraph(const Multigraph& g)
        : vertex_ids_(g.vertices().begin(), g.vertices().end()), adj_(vertex_ids_.size())
    {
        edge_ids_.reserve(g.num_edges());
        for (const Edge& e : g.edges()) {
            const int i = static_cast<int>(edge_ids_.size());
            const int a = index_of(e.u), b = index_of(e.v);
            edge_ids_.push_back(e.id);
            ends_.emplace_back(a, b);
            adj_[a].push_back(Arc{i, b});
            adj_[b].push_back(Arc{i, a}); // a loop appears twice at its vertex
        }
    }

    int num_vertices() const noexcept { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const noexcept { return static_cast<int>(edge_ids_.size()); }

    int index_of(VertexId id) const
    {
        auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
        if (it == vertex_ids_.end() || *it != id)
            throw GraphError("unknown vertex id " + std::to_string(id));
        return static_cast<int>(it - vertex_ids_.begin());
    }

    int edge_index_of(EdgeId id) const
    {
        auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
        if (it == edge_ids_.end() || *it != id)
            throw GraphError("unknown edge id " + std::to_string(id));
        return static_cast<int>(it - edge_ids_.begin());
    }

    VertexId vertex_id(int i) const { return vertex_ids_[i]; }
    EdgeId edge_id(int i) const { return edge_ids_[i]; }
    std::pair<int, int> ends(int e) const { return ends_[e]; }
    int other_end(int e, int v) const { return ends_[e].first == v ? ends_[e].second : ends_[e].first; }
    const std::vector<Arc>& arcs(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

private:
    std::vector<VertexId> vertex_ids_;
    std::vector<EdgeId> edge_ids_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<Arc>> adj_;
};

// ---------------------------------------------------------------------------
// Editing operations. All return new graphs; the input is never modified.

/// Induced subgraph on `keep`; ids are preserved.
inline Multigraph restrict_to(const Multigraph& g, std::span<const VertexId> keep)
{
    std::vector<VertexId> a(keep.begin(), keep.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    Multigraph out;
    for (VertexId v : a) {
        g.require_vertex(v);
        out.add_vertex(v);
    }
    for (const Edge& e : g.edges())
        if (std::binary_search(a.begin(), a.end(), e.u) && std::binary_search(a.begin(), a.end(), e.v))
            out.add_edge_with_id(e.id, e.u, e.v);
    return out;
}

inline Multigraph restrict_to(const Multigraph& g, std::initializer_list<VertexId> keep)
{
    return restrict_to(g, std::span<const VertexId>(keep.begin(), keep.size()));
}

inline Multigraph delete_edge(const Multigraph& g, EdgeId e)
{
    Multigraph out = g;
    out.remove_edge(e);
    return out;
}

inline Multigraph delete_vertices(const Multigraph& g, std::span<const VertexId> drop)
{
    Multigraph out = g;
    for (VertexId v : drop)
        out.remove_vertex(v);
    return out;
}

struct Subdivision {
    Multigraph graph;
    std::vector<VertexId> new_vertices; // in order from the edge's u end to its v end
    std::vector<EdgeId> new_edges;      // path edges in the same order
};

/// Replaces `e` by a path with `times` new internal vertices.
inline Subdivision subdivide_edge(const Multigraph& g, EdgeId e, int times = 1)
{
    if (times < 1)
        throw GraphError("subdivide_edge needs times >= 1");
    const Edge old = g.edge(e);
    Subdivision out{g, {}, {}};
    out.graph.remove_edge(e);
    VertexId prev = old.u;
    for (int i = 0; i < times; ++i) {
        const VertexId w = out.graph.add_vertex();
        out.new_vertices.push_back(w);
        out.new_edges.push_back(out.graph.add_edge(prev, w));
        prev = w;
    }
    out.new_edges.push_back(out.graph.add_edge(prev, old.v));
    return out;
}

/// Multigraph contraction: the merged vertex keeps the smaller id, other copies
/// parallel to `e` become loops, everything else is retained.
inline Multigraph contract_edge(const Multigraph& g, EdgeId e)
{
    const Edge c = g.edge(e);
    if (c.is_loop())
        throw GraphError("cannot contract loop " + std::to_string(e));
    const VertexId keep = std::min(c.u, c.v), gone = std::max(c.u, c.v);
    Multigraph out;
    for (VertexId v : g.vertices())
        if (v != gone)
            out.add_vertex(v);
    for (const Edge& x : g.edges()) {
        if (x.id == e)
            continue;
        out.add_edge_with_id(x.id, x.u == gone ? keep : x.u, x.v == gone ? keep : x.v);
    }
    return out;
}

/// Dissolves a degree-2 vertex whose two edge-ends belong to distinct edges.
/// The replacement edge takes the smaller of the two edge ids.
inline Multigraph suppress_vertex(const Multigraph& g, VertexId v)
{
    const auto inc = g.incident_edges(v);
    if (inc.size() != 2 || g.edge(inc[0]).is_loop())
        throw GraphError("suppress_vertex needs two non-loop edges at " + std::to_string(v));
    const VertexId a = g.edge(inc[0]).other(v), b = g.edge(inc[1]).other(v);
    Multigraph out = g;
    out.remove_vertex(v);
    out.add_edge_with_id(std::min(inc[0], inc[1]), a, b);
    return out;
}

/// Copies `b` next to `a`, shifting b's ids past a's.
inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b)
{
    Multigraph out = a;
    const VertexId dv = a.next_vertex_id() - (b.vertices().empty() ? 0 : b.vertices().front());
    const EdgeId de = a.next_edge_id() - (b.edges().empty() ? 0 : b.edges().front().id);
    for (VertexId v : b.vertices())
        out.add_vertex(v + dv);
    for (const Edge& e : b.edges())
        out.add_edge_with_id(e.id + de, e.u + dv, e.v + dv);
    return out;
}

/// Connected components as sorted vertex-id lists, ordered by smallest member.
inline std::vector<std::vector<VertexId>> components(const Multigraph& g)
{
    IndexedGraph ig(g);
    std::vector<int> comp(ig.num_vertices(), -1);
    std::vector<std::vector<VertexId>> out;
    for (int s = 0; s < ig.num_vertices(); ++s) {
        if (comp[s] >= 0)
            continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            out[c].push_back(ig.vertex_id(x));
            for (const auto& a : ig.arcs(x))
                if (comp[a.to] < 0) {
                    comp[a.to] = c;
                    stack.push_back(a.to);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

inline bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

/// Complete graph K_n on vertices 0..n-1.
inline Multigraph complete_graph(int n)
{
    Multigraph g = Multigraph::with_vertices(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

/// Cycle on vertices 0..n-1 (n >= 1; n = 1 is a loop, n = 2 a parallel pair).
inline Multigraph cycle_graph(int n)
{
    Multigraph g = Multigraph::with_vertices(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline Multigraph path_graph(int n)
{
    Multigraph g = Multigraph::with_vertices(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

} // namespace xminor
