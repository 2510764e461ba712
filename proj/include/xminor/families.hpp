#pragma once

#include "errors.hpp"
#include "multigraph.hpp"

#include <map>
#include <string>

namespace xminor {

/// A graph with named distinguished vertices (and occasionally edges).
struct LabeledGraph {
    Multigraph graph;
    std::map<VertexId, std::string> labels;
    std::map<EdgeId, std::string> edge_labels;

    VertexId vertex(const std::string& name) const
    {
        for (const auto& [v, n] : labels)
            if (n == name)
                return v;
        throw GraphError("no vertex labelled " + name);
    }

    EdgeId edge(const std::string& name) const
    {
        for (const auto& [e, n] : edge_labels)
            if (n == name)
                return e;
        throw GraphError("no edge labelled " + name);
    }
};

namespace detail {

inline void require_param(int k, int min, const char* family)
{
    if (k < min)
        throw GraphError(std::string(family) + " needs parameter >= " + std::to_string(min) + ", got " +
                         std::to_string(k));
}

inline std::string indexed(const char* role, int i) { return std::string(role) + ":" + std::to_string(i); }

} // namespace detail

/// W_k: hub 0 joined to every vertex of the rim cycle 1..k.
inline LabeledGraph wheel(int k)
{
    detail::require_param(k, 3, "wheel");
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(k + 1);
    lg.labels[0] = "hub";
    for (int i = 1; i <= k; ++i) {
        lg.labels[i] = detail::indexed("rim", i);
        lg.graph.add_edge(i, i % k + 1);
    }
    for (int i = 1; i <= k; ++i)
        lg.graph.add_edge(0, i);
    return lg;
}

/// A_k: rim v_1..v_{2k}; hub0 sees the odd rim vertices, hub0' the even ones.
/// Vertex ids: hub0 = 0, hub0' = 1, v_i = i + 1.
inline LabeledGraph alt_double_wheel(int k)
{
    detail::require_param(k, 2, "alternating double wheel");
    const int r = 2 * k;
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(r + 2);
    lg.labels[0] = "hub0";
    lg.labels[1] = "hub0'";
    auto rim = [](int i) { return i + 1; };
    for (int i = 1; i <= r; ++i) {
        lg.labels[rim(i)] = detail::indexed("rim", i);
        lg.graph.add_edge(rim(i), rim(i % r + 1));
    }
    for (int i = 1; i <= r; ++i)
        lg.graph.add_edge(i % 2 == 1 ? 0 : 1, rim(i));
    return lg;
}

/// B_k: A_k plus an edge joining the hubs.
inline LabeledGraph alt_double_wheel_with_hub_edge(int k)
{
    LabeledGraph lg = alt_double_wheel(k);
    lg.edge_labels[lg.graph.add_edge(0, 1)] = "hub-link";
    return lg;
}

/// L_k: rails v_1..v_k (ids 0..k-1) and u_1..u_k (ids k..2k-1) with rungs v_i u_i.
inline LabeledGraph ladder(int k)
{
    detail::require_param(k, 1, "ladder");
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(2 * k);
    for (int i = 0; i < k; ++i) {
        lg.labels[i] = detail::indexed("rail-v", i + 1);
        lg.labels[k + i] = detail::indexed("rail-u", i + 1);
    }
    for (int i = 0; i + 1 < k; ++i) {
        lg.graph.add_edge(i, i + 1);
        lg.graph.add_edge(k + i, k + i + 1);
    }
    for (int i = 0; i < k; ++i)
        lg.graph.add_edge(i, k + i);
    return lg;
}

/// W'_k: L_k plus v_1 v_k, then the rungs u_1 v_1 and u_k v_k contracted.
inline LabeledGraph w_prime(int k)
{
    detail::require_param(k, 3, "W'");
    LabeledGraph lg = ladder(k);
    lg.graph.add_edge(0, k - 1);
    auto rung = [&](int i) {
        for (const Edge& e : lg.graph.edges())
            if (std::minmax(e.u, e.v) == std::minmax(i, k + i))
                return e.id;
        throw GraphError("missing rung");
    };
    lg.graph = contract_edge(lg.graph, rung(0));
    lg.graph = contract_edge(lg.graph, rung(k - 1));
    lg.labels.erase(k);
    lg.labels.erase(2 * k - 1);
    return lg;
}

/// O_k: L_k plus v_1 v_k and u_1 u_k.
inline LabeledGraph circular_ladder(int k)
{
    detail::require_param(k, 3, "circular ladder");
    LabeledGraph lg = ladder(k);
    lg.graph.add_edge(0, k - 1);
    lg.graph.add_edge(k, 2 * k - 1);
    return lg;
}

/// M_k: L_k plus v_1 u_k and u_1 v_k.
inline LabeledGraph mobius_ladder(int k)
{
    detail::require_param(k, 3, "Mobius ladder");
    LabeledGraph lg = ladder(k);
    lg.graph.add_edge(0, 2 * k - 1);
    lg.graph.add_edge(k, k - 1);
    return lg;
}

/// K_{a,b}: left side ids 0..a-1, right side a..a+b-1.
inline LabeledGraph complete_bipartite(int a, int b)
{
    detail::require_param(a, 1, "complete bipartite");
    detail::require_param(b, 1, "complete bipartite");
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(a + b);
    for (int i = 0; i < a; ++i)
        lg.labels[i] = detail::indexed("left", i + 1);
    for (int j = 0; j < b; ++j)
        lg.labels[a + j] = detail::indexed("right", j + 1);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i)
            lg.graph.add_edge(i, a + j);
    return lg;
}

/// K_{4,k} with the degree-k side named x, y, x', y' (ids 0..3) and v_i = 3 + i.
inline LabeledGraph k4k(int k)
{
    detail::require_param(k, 1, "K4k");
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(4 + k);
    lg.labels = {{0, "x"}, {1, "y"}, {2, "x'"}, {3, "y'"}};
    for (int i = 1; i <= k; ++i) {
        lg.labels[3 + i] = detail::indexed("v", i);
        for (int h = 0; h < 4; ++h)
            lg.graph.add_edge(h, 3 + i);
    }
    return lg;
}

/// K'_{4,k}: v_i (id 3 + i) sees v'_i, x, y; v'_i (id 3 + k + i) sees v_i, x', y'.
inline LabeledGraph k4k_split(int k)
{
    detail::require_param(k, 1, "K'4k");
    LabeledGraph lg;
    lg.graph = Multigraph::with_vertices(4 + 2 * k);
    lg.labels = {{0, "x"}, {1, "y"}, {2, "x'"}, {3, "y'"}};
    for (int i = 1; i <= k; ++i) {
        const VertexId v = 3 + i, w = 3 + k + i;
        lg.labels[v] = detail::indexed("v", i);
        lg.labels[w] = detail::indexed("v'", i);
        lg.graph.add_edge(v, w);
        lg.graph.add_edge(v, 0);
        lg.graph.add_edge(v, 1);
        lg.graph.add_edge(w, 2);
        lg.graph.add_edge(w, 3);
    }
    return lg;
}

/// Cycle of length 2k+1 plus every chord joining vertices at distance exactly k.
inline LabeledGraph cycle_with_distance_k_chords(int k)
{
    detail::require_param(k, 2, "cycle with distance-k chords");
    const int n = 2 * k + 1;
    LabeledGraph lg;
    lg.graph = cycle_graph(n);
    for (int i = 0; i < n; ++i)
        lg.labels[i] = detail::indexed("cycle", i + 1);
    for (int i = 0; i < n; ++i)
        lg.graph.add_edge(i, (i + k) % n);
    return lg;
}

/// Cycle of length k plus two adjacent vertices joined to every cycle vertex.
inline LabeledGraph cycle_plus_two_hubs(int k)
{
    detail::require_param(k, 2, "cycle plus two hubs");
    LabeledGraph lg;
    lg.graph = cycle_graph(k);
    for (int i = 0; i < k; ++i)
        lg.labels[i] = detail::indexed("cycle", i + 1);
    const VertexId h0 = lg.graph.add_vertex(), h1 = lg.graph.add_vertex();
    lg.labels[h0] = "hub0";
    lg.labels[h1] = "hub1";
    lg.edge_labels[lg.graph.add_edge(h0, h1)] = "hub-link";
    for (int i = 0; i < k; ++i) {
        lg.graph.add_edge(h0, i);
        lg.graph.add_edge(h1, i);
    }
    return lg;
}

/// A_4 with rim edges v_1v_2 and v_5v_6 subdivided once and the two new
/// vertices joined by the edge labelled "link".
inline LabeledGraph a4_gadget()
{
    LabeledGraph lg = alt_double_wheel(4);
    auto rim_edge = [&](int i, int j) {
        const VertexId a = lg.vertex(detail::indexed("rim", i)), b = lg.vertex(detail::indexed("rim", j));
        for (const Edge& e : lg.graph.edges())
            if (std::minmax(e.u, e.v) == std::minmax(a, b))
                return e.id;
        throw GraphError("missing rim edge");
    };
    auto s1 = subdivide_edge(lg.graph, rim_edge(1, 2), 1);
    lg.graph = s1.graph;
    auto s2 = subdivide_edge(lg.graph, rim_edge(5, 6), 1);
    lg.graph = s2.graph;
    const VertexId a = s1.new_vertices[0], b = s2.new_vertices[0];
    lg.labels[a] = "sub:12";
    lg.labels[b] = "sub:56";
    lg.edge_labels[lg.graph.add_edge(a, b)] = "link";
    return lg;
}

} // namespace xminor
