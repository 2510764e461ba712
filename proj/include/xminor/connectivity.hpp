#pragma once

#include "errors.hpp"
#include "multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace xminor {

namespace detail {

/// Unit-capacity max flow on the vertex-split network of an IndexedGraph.
/// Vertex v becomes in = 2v, out = 2v+1 joined by an arc of capacity `vcap[v]`;
/// every undirected edge yields out(a)->in(b) and out(b)->in(a) of capacity 1.
class SplitFlow {
public:
    template <typename Skip = bool (*)(int)>
    SplitFlow(const IndexedGraph& g, const std::vector<int>& vcap,
              Skip&& skip = [](int) { return false; })
        : n_(2 * g.num_vertices() + 2), head_(n_, -1)
    {
        for (int v = 0; v < g.num_vertices(); ++v)
            add_arc(2 * v, 2 * v + 1, vcap[v]);
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.ends(e);
            if (a == b || skip(e))
                continue;
            add_arc(2 * a + 1, 2 * b, 1);
            add_arc(2 * b + 1, 2 * a, 1);
        }
    }

    int source() const { return n_ - 2; }
    int sink() const { return n_ - 1; }
    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    void add_arc(int from, int to, int cap)
    {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    /// Augments from source() to sink() until `limit` units flow or no path remains.
    int run(int limit)
    {
        int flow = 0;
        std::vector<int> via(n_);
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> q{source()};
            via[source()] = -2;
            while (!q.empty() && via[sink()] == -1) {
                const int x = q.front();
                q.pop_front();
                for (int a = head_[x]; a != -1; a = arcs_[a].next)
                    if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
                        via[arcs_[a].to] = a;
                        q.push_back(arcs_[a].to);
                    }
            }
            if (via[sink()] == -1)
                break;
            for (int x = sink(); x != source();) {
                const int a = via[x];
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                x = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct FlowArc {
        int to;
        int next;
        int cap;
    };
    int n_;
    std::vector<int> head_;
    std::vector<FlowArc> arcs_;
};

constexpr int kUnbounded = 1 << 20;

} // namespace detail

/// Number of internally vertex-disjoint s-t paths, capped at `limit`. A direct
/// s-t edge counts as one path; parallel copies of it add nothing.
inline int local_connectivity(const IndexedGraph& g, int s, int t, int limit)
{
    std::vector<int> vcap(g.num_vertices(), 1);
    vcap[s] = vcap[t] = detail::kUnbounded;
    bool direct = false;
    detail::SplitFlow f(g, vcap, [&](int e) {
        auto [a, b] = g.ends(e);
        const bool st = (a == s && b == t) || (a == t && b == s);
        direct = direct || st;
        return st;
    });
    f.add_arc(f.source(), detail::SplitFlow::out(s), detail::kUnbounded);
    f.add_arc(detail::SplitFlow::in(t), f.sink(), detail::kUnbounded);
    if (direct)
        return limit <= 0 ? 0 : 1 + f.run(limit - 1);
    return f.run(limit);
}

/// Size of a largest fan from `v` to `targets`: paths that end at distinct
/// targets and share only `v`. Capped at `limit`.
inline int fan_size(const IndexedGraph& g, int v, const std::vector<int>& targets, int limit)
{
    std::vector<int> vcap(g.num_vertices(), 1);
    vcap[v] = detail::kUnbounded;
    detail::SplitFlow f(g, vcap);
    f.add_arc(f.source(), detail::SplitFlow::out(v), detail::kUnbounded);
    for (int t : targets) {
        if (t == v)
            continue;
        f.add_arc(detail::SplitFlow::out(t), f.sink(), 1);
    }
    return f.run(limit);
}

/// True iff G has at least k+1 vertices and no vertex cut of size < k.
/// Loops are ignored and parallel edges add no connectivity.
inline bool is_k_connected(const Multigraph& g, int k)
{
    if (k < 0 || k > 4)
        throw GraphError("is_k_connected supports 0 <= k <= 4");
    if (k == 0)
        return true;
    const int n = static_cast<int>(g.num_vertices());
    if (n < k + 1)
        return false;
    if (!is_connected(g))
        return false;
    IndexedGraph ig(g);
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    for (int e = 0; e < ig.num_edges(); ++e) {
        auto [a, b] = ig.ends(e);
        adjacent[a][b] = adjacent[b][a] = 1;
    }
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!adjacent[s][t] && local_connectivity(ig, s, t, k) < k)
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Separations

/// Pair (A,B) with A ∪ B = V(G) and no edge between A−B and B−A.
struct Separation {
    std::vector<VertexId> side_a; // sorted
    std::vector<VertexId> side_b; // sorted

    std::vector<VertexId> separator() const
    {
        std::vector<VertexId> s;
        std::set_intersection(side_a.begin(), side_a.end(), side_b.begin(), side_b.end(),
                              std::back_inserter(s));
        return s;
    }
    std::size_t order() const { return separator().size(); }
    std::vector<VertexId> a_only() const
    {
        std::vector<VertexId> s;
        std::set_difference(side_a.begin(), side_a.end(), side_b.begin(), side_b.end(),
                            std::back_inserter(s));
        return s;
    }
    std::vector<VertexId> b_only() const
    {
        std::vector<VertexId> s;
        std::set_difference(side_b.begin(), side_b.end(), side_a.begin(), side_a.end(),
                            std::back_inserter(s));
        return s;
    }
    bool nontrivial() const { return !a_only().empty() && !b_only().empty(); }

    friend bool operator==(const Separation&, const Separation&) = default;
    friend auto operator<=>(const Separation&, const Separation&) = default;
};

/// Checks the separation axioms against `g` by direct scan.
inline bool is_separation(const Multigraph& g, const Separation& s)
{
    std::vector<VertexId> all;
    std::set_union(s.side_a.begin(), s.side_a.end(), s.side_b.begin(), s.side_b.end(),
                   std::back_inserter(all));
    if (!std::equal(all.begin(), all.end(), g.vertices().begin(), g.vertices().end()))
        return false;
    const auto ao = s.a_only(), bo = s.b_only();
    for (const Edge& e : g.edges()) {
        const bool ua = std::binary_search(ao.begin(), ao.end(), e.u);
        const bool va = std::binary_search(ao.begin(), ao.end(), e.v);
        const bool ub = std::binary_search(bo.begin(), bo.end(), e.u);
        const bool vb = std::binary_search(bo.begin(), bo.end(), e.v);
        if ((ua && vb) || (ub && va))
            return false;
    }
    return true;
}

/// Orders the two sides so that side_a is lexicographically smaller.
inline Separation canonical_separation(std::vector<VertexId> a, std::vector<VertexId> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b < a)
        std::swap(a, b);
    return Separation{std::move(a), std::move(b)};
}

struct SeparationOptions {
    int max_allowed_order = 3;
    std::size_t max_results = 2'000'000;
};

namespace detail {

template <typename F>
void for_each_subset(int n, int size, F&& f)
{
    std::vector<int> idx(size);
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
        if (pos == size)
            return f(static_cast<const std::vector<int>&>(idx));
        for (int i = start; i <= n - (size - pos); ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, i + 1))
                return false;
        }
        return true;
    };
    rec(0, 0);
}

/// Components of g minus the `removed` dense vertices, as dense index lists.
inline std::vector<std::vector<int>> components_without(const IndexedGraph& g,
                                                        const std::vector<char>& removed)
{
    std::vector<int> comp(g.num_vertices(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (removed[s] || comp[s] >= 0)
            continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            out[c].push_back(x);
            for (const auto& a : g.arcs(x))
                if (!removed[a.to] && comp[a.to] < 0) {
                    comp[a.to] = c;
                    stack.push_back(a.to);
                }
        }
    }
    return out;
}

} // namespace detail

/// Every nontrivial separation of order at most `max_order`, each listed once
/// up to swapping sides. For each vertex set S with |S| <= max_order, the
/// components of G−S are split into two nonempty groups in every possible way.
inline std::vector<Separation> enumerate_separations(const Multigraph& g, int max_order,
                                                     const SeparationOptions& opt = {})
{
    if (max_order < 0 || max_order > opt.max_allowed_order)
        throw GraphError("enumerate_separations: max order " + std::to_string(max_order) +
                         " exceeds the configured limit " + std::to_string(opt.max_allowed_order));
    IndexedGraph ig(g);
    const int n = ig.num_vertices();
    std::set<Separation> found;
    for (int size = 0; size <= std::min(max_order, n); ++size) {
        detail::for_each_subset(n, size, [&](const std::vector<int>& cut) {
            std::vector<char> removed(n, 0);
            for (int c : cut)
                removed[c] = 1;
            const auto comps = detail::components_without(ig, removed);
            const int k = static_cast<int>(comps.size());
            if (k < 2)
                return true;
            if (k > 24)
                throw BudgetExceeded("enumerate_separations: too many components behind one cut");
            // Fix component 0 on side A to skip mirrored partitions.
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<VertexId> a, b;
                for (int c : cut) {
                    a.push_back(ig.vertex_id(c));
                    b.push_back(ig.vertex_id(c));
                }
                for (int ci = 0; ci < k; ++ci) {
                    const bool on_b = ci > 0 && ((mask >> (ci - 1)) & 1u);
                    for (int x : comps[ci])
                        (on_b ? b : a).push_back(ig.vertex_id(x));
                }
                if (a.size() == cut.size() || b.size() == cut.size())
                    continue;
                found.insert(canonical_separation(std::move(a), std::move(b)));
                if (found.size() > opt.max_results)
                    throw BudgetExceeded("enumerate_separations: result cap exceeded");
            }
            return true;
        });
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Blocks

struct Block {
    std::vector<VertexId> vertices; // sorted
    std::vector<EdgeId> edges;      // sorted
    bool end_block = false;         // degree one in the block graph
};

/// Block decomposition. Loops form blocks of their own; a cut vertex is a vertex
/// lying in two or more blocks (the usual notion for loopless graphs).
struct BlockForest {
    std::vector<Block> blocks;
    std::vector<VertexId> cut_vertices; // sorted
    /// (block index, cut vertex) incidences of the block graph.
    std::vector<std::pair<int, VertexId>> incidence;

    /// Degree of each block in the block graph.
    int block_degree(int b) const
    {
        return static_cast<int>(std::count_if(incidence.begin(), incidence.end(),
                                              [b](const auto& p) { return p.first == b; }));
    }

    /// True iff the block graph is a path (a single block counts).
    bool block_graph_is_path() const
    {
        if (blocks.empty())
            return true;
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            if (block_degree(b) > 2)
                return false;
        for (VertexId c : cut_vertices) {
            const auto d = std::count_if(incidence.begin(), incidence.end(),
                                         [c](const auto& p) { return p.second == c; });
            if (d > 2)
                return false;
        }
        // Acyclic by construction; a forest with max degree 2 is a path iff connected.
        const std::size_t nodes = blocks.size() + cut_vertices.size();
        return incidence.size() + 1 == nodes;
    }
};

inline BlockForest blocks(const Multigraph& g)
{
    IndexedGraph ig(g);
    const int n = ig.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> raw_blocks; // dense edge index lists
    std::vector<char> in_block_vertex(n, 0);
    int time = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = time++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& arcs = ig.arcs(f.v);
            if (f.next < arcs.size()) {
                const auto a = arcs[f.next++];
                if (a.edge == f.parent_edge)
                    continue;
                auto [eu, ev] = ig.ends(a.edge);
                if (eu == ev)
                    continue; // loops handled below
                if (disc[a.to] < 0) {
                    edge_stack.push_back(a.edge);
                    disc[a.to] = low[a.to] = time++;
                    stack.push_back({a.to, a.edge, 0});
                } else if (disc[a.to] < disc[f.v]) {
                    edge_stack.push_back(a.edge);
                    low[f.v] = std::min(low[f.v], disc[a.to]);
                }
            } else {
                const int v = f.v, pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty())
                    break;
                const int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    std::vector<int> blk;
                    while (true) {
                        const int e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == pe)
                            break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            }
        }
    }
    for (int e = 0; e < ig.num_edges(); ++e) {
        auto [a, b] = ig.ends(e);
        if (a == b)
            raw_blocks.push_back({e});
    }

    BlockForest out;
    std::vector<int> membership(n, 0);
    for (const auto& rb : raw_blocks) {
        Block b;
        for (int e : rb) {
            b.edges.push_back(ig.edge_id(e));
            auto [x, y] = ig.ends(e);
            b.vertices.push_back(ig.vertex_id(x));
            b.vertices.push_back(ig.vertex_id(y));
            in_block_vertex[x] = in_block_vertex[y] = 1;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        for (VertexId v : b.vertices)
            ++membership[ig.index_of(v)];
        out.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < n; ++v)
        if (!in_block_vertex[v]) {
            out.blocks.push_back(Block{{ig.vertex_id(v)}, {}, false});
            membership[v] = 1;
        }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& x, const Block& y) {
        return std::tie(x.vertices, x.edges) < std::tie(y.vertices, y.edges);
    });
    for (int v = 0; v < n; ++v)
        if (membership[v] >= 2)
            out.cut_vertices.push_back(ig.vertex_id(v));
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (VertexId v : out.blocks[b].vertices)
            if (std::binary_search(out.cut_vertices.begin(), out.cut_vertices.end(), v))
                out.incidence.emplace_back(b, v);
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        out.blocks[b].end_block = out.block_degree(b) == 1;
    return out;
}

/// Edges whose removal disconnects their component (bridges); loops excluded.
inline std::vector<EdgeId> cut_edges(const Multigraph& g)
{
    std::vector<EdgeId> out;
    for (const Block& b : blocks(g).blocks)
        if (b.edges.size() == 1 && b.vertices.size() == 2)
            out.push_back(b.edges.front());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace xminor
