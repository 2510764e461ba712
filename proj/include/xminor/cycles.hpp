#pragma once

#include "errors.hpp"
#include "multigraph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xminor {

/// A cycle given in traversal order: edges[i] joins vertices[i] and vertices[i+1 mod n].
struct CycleWalk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Orders an edge set into a cycle walk, or returns nullopt if the edges do not
/// form a single cycle of `g`.
inline std::optional<CycleWalk> as_cycle(const Multigraph& g, std::vector<EdgeId> edge_set)
{
    std::sort(edge_set.begin(), edge_set.end());
    if (edge_set.empty() || std::adjacent_find(edge_set.begin(), edge_set.end()) != edge_set.end())
        return std::nullopt;
    for (EdgeId e : edge_set)
        if (!g.has_edge(e))
            return std::nullopt;
    if (edge_set.size() == 1) {
        const Edge& e = g.edge(edge_set[0]);
        if (!e.is_loop())
            return std::nullopt;
        return CycleWalk{{e.u}, {e.id}};
    }
    CycleWalk w;
    std::vector<char> used(edge_set.size(), 0);
    const Edge& first = g.edge(edge_set[0]);
    if (first.is_loop())
        return std::nullopt;
    w.vertices.push_back(first.u);
    w.edges.push_back(first.id);
    used[0] = 1;
    VertexId at = first.v;
    while (w.edges.size() < edge_set.size()) {
        bool advanced = false;
        for (std::size_t i = 0; i < edge_set.size(); ++i) {
            if (used[i])
                continue;
            const Edge& e = g.edge(edge_set[i]);
            if (e.is_loop() || !e.has_end(at))
                continue;
            used[i] = 1;
            w.vertices.push_back(at);
            w.edges.push_back(e.id);
            at = e.other(at);
            advanced = true;
            break;
        }
        if (!advanced)
            return std::nullopt;
    }
    if (at != w.vertices.front())
        return std::nullopt;
    auto vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return std::nullopt;
    return w;
}

inline CycleWalk require_cycle(const Multigraph& g, const std::vector<EdgeId>& edges)
{
    auto c = as_cycle(g, edges);
    if (!c)
        throw GraphError("edge set is not a cycle of the graph");
    return *c;
}

/// Calls `visit` once per cycle of `g` (as a sorted edge-id list) until it
/// returns false. Loops and parallel pairs count as cycles of length 1 and 2.
/// Throws BudgetExceeded after `max_cycles` cycles or `max_steps` search steps.
inline void enumerate_cycles(const Multigraph& g,
                             const std::function<bool(const std::vector<EdgeId>&)>& visit,
                             std::size_t max_cycles = 1'000'000, std::size_t max_steps = 50'000'000)
{
    IndexedGraph ig(g);
    Budget steps(max_steps, "cycle enumeration");
    std::size_t count = 0;
    auto emit = [&](std::vector<EdgeId> c) {
        if (++count > max_cycles)
            throw BudgetExceeded("cycle enumeration: more than " + std::to_string(max_cycles) + " cycles");
        std::sort(c.begin(), c.end());
        return visit(c);
    };
    for (int e = 0; e < ig.num_edges(); ++e) {
        auto [a, b] = ig.ends(e);
        if (a == b && !emit({ig.edge_id(e)}))
            return;
    }
    const int n = ig.num_vertices();
    std::vector<char> on_path(n, 0);
    std::vector<int> path_edges;
    bool stop = false;
    std::function<void(int, int)> dfs = [&](int s, int v) {
        steps.tick();
        for (const auto& arc : ig.arcs(v)) {
            if (stop)
                return;
            if (arc.to == v)
                continue; // loop
            if (!path_edges.empty() && arc.edge == path_edges.back())
                continue;
            if (arc.to == s) {
                if (path_edges.empty() || path_edges.front() >= arc.edge)
                    continue;
                std::vector<EdgeId> c;
                for (int pe : path_edges)
                    c.push_back(ig.edge_id(pe));
                c.push_back(ig.edge_id(arc.edge));
                if (!emit(std::move(c)))
                    stop = true;
                continue;
            }
            if (arc.to < s || on_path[arc.to])
                continue;
            on_path[arc.to] = 1;
            path_edges.push_back(arc.edge);
            dfs(s, arc.to);
            path_edges.pop_back();
            on_path[arc.to] = 0;
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        on_path[s] = 1;
        dfs(s, s);
        on_path[s] = 0;
    }
}

/// All cycles as sorted edge lists (convenience wrapper).
inline std::vector<std::vector<EdgeId>> all_cycles(const Multigraph& g, std::size_t max_cycles = 1'000'000)
{
    std::vector<std::vector<EdgeId>> out;
    enumerate_cycles(
        g,
        [&](const std::vector<EdgeId>& c) {
            out.push_back(c);
            return true;
        },
        max_cycles);
    return out;
}

} // namespace xminor
