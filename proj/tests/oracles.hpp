#pragma once

// Brute-force reference implementations used only by tests. Each one is
// deliberately naive and shares no search code with the library.

#include <xminor/multigraph.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using xminor::EdgeId;
using xminor::Multigraph;
using xminor::VertexId;

inline Multigraph random_graph(std::mt19937& rng, int n, int m, bool allow_multi = false)
{
    Multigraph g = Multigraph::with_vertices(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<std::pair<int, int>> used;
    int guard = 0;
    while (static_cast<int>(g.num_edges()) < m && guard++ < 100 * (m + 1)) {
        int a = pick(rng), b = pick(rng);
        if (a == b && !allow_multi)
            continue;
        if (a > b)
            std::swap(a, b);
        if (!allow_multi && !used.insert({a, b}).second)
            continue;
        g.add_edge(a, b);
    }
    return g;
}

// Plain adjacency over dense indices 0..n-1.
struct Dense {
    int n = 0;
    std::vector<std::pair<int, int>> ends;
    std::vector<VertexId> vid;
    std::vector<EdgeId> eid;

    explicit Dense(const Multigraph& g)
    {
        n = static_cast<int>(g.num_vertices());
        vid.assign(g.vertices().begin(), g.vertices().end());
        auto idx = [&](VertexId v) { return static_cast<int>(std::lower_bound(vid.begin(), vid.end(), v) - vid.begin()); };
        for (const auto& e : g.edges()) {
            ends.push_back({idx(e.u), idx(e.v)});
            eid.push_back(e.id);
        }
    }
};

inline int count_components(int n, const std::vector<std::pair<int, int>>& ends, const std::vector<char>& alive)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (auto [a, b] : ends)
        if (alive[a] && alive[b])
            p[find(a)] = find(b);
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v] && find(v) == v)
            ++c;
    return c;
}

// Vertex connectivity by removing every subset of fewer than k vertices.
inline bool k_connected(const Multigraph& g, int k)
{
    Dense d(g);
    if (d.n < k + 1)
        return false;
    for (std::uint32_t mask = 0; mask < (1u << d.n); ++mask) {
        if (std::popcount(mask) >= k)
            continue;
        std::vector<char> alive(d.n);
        for (int v = 0; v < d.n; ++v)
            alive[v] = !(mask >> v & 1);
        if (count_components(d.n, d.ends, alive) > 1)
            return false;
    }
    return true;
}

// Every nontrivial separation of order <= max_order, as canonical (A,B) pairs
// of sorted vertex-id lists with A lexicographically smaller. Assigns each
// vertex to A-only, B-only or both (3^n).
inline std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> separations(const Multigraph& g,
                                                                                       int max_order)
{
    Dense d(g);
    std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> out;
    std::vector<int> side(d.n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == d.n) {
            int order = 0, ao = 0, bo = 0;
            for (int s : side)
                order += s == 2, ao += s == 0, bo += s == 1;
            if (order > max_order || ao == 0 || bo == 0)
                return;
            for (auto [a, b] : d.ends)
                if ((side[a] == 0 && side[b] == 1) || (side[a] == 1 && side[b] == 0))
                    return;
            std::vector<VertexId> A, B;
            for (int v = 0; v < d.n; ++v) {
                if (side[v] != 1)
                    A.push_back(d.vid[v]);
                if (side[v] != 0)
                    B.push_back(d.vid[v]);
            }
            if (B < A)
                std::swap(A, B);
            out.insert({A, B});
            return;
        }
        for (int s = 0; s < 3; ++s) {
            side[i] = s;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// ---- rotation-system search -------------------------------------------------

// Enumerates every rotation system of `g` (each vertex's cyclic dart order
// with the first dart fixed) and calls `visit(faces)` with the face list,
// where each face is a list of darts (2*edge_index + end) and darts are
// traced by next(d) = succ(twin(d)). Stops when visit returns true.
// Returns false without visiting if the number of rotation systems exceeds `cap`.
inline bool for_each_rotation(const Multigraph& g, const std::function<bool(const std::vector<std::vector<int>>&)>& visit,
                              double cap = 3e5)
{
    Dense d(g);
    std::vector<std::vector<int>> darts(d.n);
    for (int e = 0; e < static_cast<int>(d.ends.size()); ++e) {
        darts[d.ends[e].first].push_back(2 * e);
        darts[d.ends[e].second].push_back(2 * e + 1);
    }
    double total = 1;
    for (auto& ds : darts)
        for (int k = 2; k < static_cast<int>(ds.size()); ++k)
            total *= k;
    if (total > cap)
        return false;
    const int nd = 2 * static_cast<int>(d.ends.size());
    std::vector<int> succ(nd);
    std::vector<std::vector<int>> cur = darts;
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == d.n) {
            for (auto& ds : cur)
                for (std::size_t i = 0; i < ds.size(); ++i)
                    succ[ds[i]] = ds[(i + 1) % ds.size()];
            std::vector<char> seen(nd, 0);
            std::vector<std::vector<int>> faces;
            for (int s = 0; s < nd; ++s) {
                if (seen[s])
                    continue;
                faces.emplace_back();
                int x = s;
                while (!seen[x]) {
                    seen[x] = 1;
                    faces.back().push_back(x);
                    x = succ[x ^ 1];
                }
            }
            return visit(faces);
        }
        auto& ds = cur[v];
        if (ds.size() <= 2)
            return rec(v + 1);
        std::sort(ds.begin() + 1, ds.end());
        do {
            if (rec(v + 1))
                return true;
        } while (std::next_permutation(ds.begin() + 1, ds.end()));
        return false;
    };
    rec(0);
    return true;
}

struct EmbedAnswer {
    bool decided = false;
    bool yes = false;
};

// Planar iff some rotation system gives Euler characteristic 2 per component.
// With a boundary, additionally every component's boundary vertices share a face.
inline EmbedAnswer disk_embeddable(const Multigraph& g, const std::vector<VertexId>& boundary = {})
{
    Dense d(g);
    std::vector<int> comp(d.n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [a, b] : d.ends)
        comp[find(a)] = find(b);
    int c = 0, isolated = 0;
    std::vector<int> deg(d.n, 0);
    for (auto [a, b] : d.ends)
        ++deg[a], ++deg[b];
    for (int v = 0; v < d.n; ++v) {
        c += find(v) == v;
        isolated += deg[v] == 0;
    }
    std::vector<int> bidx;
    for (VertexId v : boundary)
        bidx.push_back(static_cast<int>(std::lower_bound(d.vid.begin(), d.vid.end(), v) - d.vid.begin()));
    const int m = static_cast<int>(d.ends.size());
    EmbedAnswer ans;
    ans.decided = for_each_rotation(g, [&](const std::vector<std::vector<int>>& faces) {
        if (d.n - m + static_cast<int>(faces.size()) + isolated != 2 * c)
            return false;
        // group boundary vertices by component; each group must share a face
        std::map<int, std::vector<int>> groups;
        for (int b : bidx)
            if (deg[b] > 0)
                groups[find(b)].push_back(b);
        for (auto& [root, bs] : groups) {
            bool ok = false;
            for (const auto& f : faces) {
                std::set<int> on;
                for (int dart : f) {
                    const auto [a, b] = d.ends[dart / 2];
                    on.insert(dart % 2 == 0 ? a : b);
                }
                if (std::all_of(bs.begin(), bs.end(), [&](int x) { return on.count(x); })) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                return false;
        }
        ans.yes = true;
        return true;
    });
    return ans;
}

// Topological containment by trying every injective vertex map and then every
// system of edge-disjoint, internally disjoint paths, one pattern edge at a time.
inline bool has_subdivision(const Multigraph& pattern, const Multigraph& host)
{
    const Dense g(pattern), h(host);
    if (g.n > h.n)
        return false;
    std::vector<int> gdeg(g.n, 0), hdeg(h.n, 0);
    for (auto [a, b] : g.ends)
        ++gdeg[a], ++gdeg[b];
    for (auto [a, b] : h.ends)
        ++hdeg[a], ++hdeg[b];
    std::vector<int> map(g.n, -1);
    std::vector<char> image(h.n, 0), used_v(h.n, 0), used_e(h.ends.size(), 0);

    std::function<bool(std::size_t)> route = [&](std::size_t k) -> bool {
        if (k == g.ends.size())
            return true;
        const int s = map[g.ends[k].first], t = map[g.ends[k].second];
        std::function<bool(int)> walk = [&](int v) -> bool {
            for (std::size_t e = 0; e < h.ends.size(); ++e) {
                if (used_e[e])
                    continue;
                auto [a, b] = h.ends[e];
                if (a != v && b != v)
                    continue;
                const int w = a == v ? b : a;
                used_e[e] = 1;
                bool ok = false;
                if (w == t)
                    ok = route(k + 1);
                else if (!image[w] && !used_v[w] && w != v) {
                    used_v[w] = 1;
                    ok = walk(w);
                    used_v[w] = 0;
                }
                used_e[e] = 0;
                if (ok)
                    return true;
            }
            return false;
        };
        return walk(s);
    };
    std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == g.n)
            return route(0);
        for (int x = 0; x < h.n; ++x) {
            if (image[x] || hdeg[x] < gdeg[i])
                continue;
            image[x] = 1;
            map[i] = x;
            if (assign(i + 1))
                return true;
            image[x] = 0;
        }
        return false;
    };
    return assign(0);
}

// Minor containment by labelling every host vertex with a pattern vertex or
// "unused" and checking connectivity, edge multiplicities and cycle rank.
inline bool has_minor(const Multigraph& pattern, const Multigraph& host)
{
    const Dense g(pattern), h(host);
    if (g.n > h.n)
        return false;
    std::vector<std::vector<int>> need(g.n, std::vector<int>(g.n, 0));
    for (auto [a, b] : g.ends)
        ++need[std::min(a, b)][std::max(a, b)];
    std::vector<int> label(h.n, 0); // 0 = unused, p + 1 = branch set of p
    std::vector<int> size(g.n, 0);
    int empty = g.n;
    auto check = [&] {
        std::vector<std::vector<int>> have(g.n, std::vector<int>(g.n, 0));
        std::vector<int> parent(h.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [a, b] : h.ends) {
            if (!label[a] || !label[b])
                continue;
            const int p = label[a] - 1, q = label[b] - 1;
            ++have[std::min(p, q)][std::max(p, q)];
            if (p == q)
                parent[find(a)] = find(b);
        }
        for (int p = 0; p < g.n; ++p) {
            int roots = 0;
            for (int x = 0; x < h.n; ++x)
                roots += label[x] == p + 1 && find(x) == x;
            if (roots != 1)
                return false;
            // internal edges minus spanning tree edges are available as loops
            if (have[p][p] - (size[p] - 1) < need[p][p])
                return false;
            for (int q = p + 1; q < g.n; ++q)
                if (have[p][q] < need[p][q])
                    return false;
        }
        return true;
    };
    // every labelling, skipping those that can no longer fill all branch sets
    std::function<bool(int)> assign = [&](int x) -> bool {
        if (x == h.n)
            return empty == 0 && check();
        if (h.n - x < empty)
            return false;
        for (int l = 0; l <= g.n; ++l) {
            label[x] = l;
            if (l && size[l - 1]++ == 0)
                --empty;
            const bool ok = assign(x + 1);
            if (l && --size[l - 1] == 0)
                ++empty;
            if (ok)
                return true;
        }
        label[x] = 0;
        return false;
    };
    return assign(0);
}

// Crossing number at most c by trying every pair of independent edges at
// every level, without ordering or pruning. Planarity comes straight from
// Boost on a deduplicated edge list.
inline bool planar_edges(int n, const std::vector<std::pair<int, int>>& ends)
{
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    std::set<std::pair<int, int>> simple;
    for (auto [a, b] : ends)
        if (a != b)
            simple.insert(std::minmax(a, b));
    G bg(n);
    for (auto [a, b] : simple)
        boost::add_edge(a, b, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline bool crossing_at_most(int n, const std::vector<std::pair<int, int>>& ends, int c)
{
    if (planar_edges(n, ends))
        return true;
    if (c == 0)
        return false;
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            auto [a, b] = ends[i];
            auto [x, y] = ends[j];
            if (a == b || x == y || a == x || a == y || b == x || b == y)
                continue;
            std::vector<std::pair<int, int>> next;
            for (std::size_t k = 0; k < ends.size(); ++k)
                if (k != i && k != j)
                    next.push_back(ends[k]);
            next.insert(next.end(), {{a, n}, {n, b}, {x, n}, {n, y}});
            if (crossing_at_most(n + 1, next, c - 1))
                return true;
        }
    return false;
}

inline bool crossing_at_most(const Multigraph& g, int c)
{
    const Dense d(g);
    return crossing_at_most(d.n, d.ends, c);
}

// No S with |S| <= 2 such that G - S has a component missing x1, x2, x3.
inline bool internally_3_connected(const Multigraph& g, const std::vector<VertexId>& x)
{
    Dense d(g);
    std::vector<char> is_x(d.n, 0);
    for (VertexId v : x)
        is_x[std::lower_bound(d.vid.begin(), d.vid.end(), v) - d.vid.begin()] = 1;
    for (std::uint32_t mask = 0; mask < (1u << d.n); ++mask) {
        if (std::popcount(mask) > 2)
            continue;
        std::vector<int> p(d.n);
        std::iota(p.begin(), p.end(), 0);
        std::function<int(int)> find = [&](int v) { return p[v] == v ? v : p[v] = find(p[v]); };
        for (auto [a, b] : d.ends)
            if (!(mask >> a & 1) && !(mask >> b & 1))
                p[find(a)] = find(b);
        std::map<int, bool> has_x;
        for (int v = 0; v < d.n; ++v)
            if (!(mask >> v & 1))
                has_x[find(v)] = has_x[find(v)] || is_x[v];
        for (auto [root, ok] : has_x)
            if (!ok)
                return false;
    }
    return true;
}

// Literal robust test: try every f in ins(C) and every e in E(C), and look for
// a component of G - X - e - f meeting the neighbourhoods of all three x_i.
inline bool robust(const Multigraph& g, const std::vector<VertexId>& x, const std::vector<EdgeId>& cycle,
                   const std::vector<EdgeId>& ins)
{
    std::set<VertexId> on;
    for (EdgeId e : cycle)
        on.insert(g.edge(e).u), on.insert(g.edge(e).v);
    if (std::all_of(x.begin(), x.end(), [&](VertexId v) { return on.count(v); }) || ins.empty())
        return false;
    auto is_x = [&](VertexId v) { return std::find(x.begin(), x.end(), v) != x.end(); };
    for (EdgeId f : ins) {
        bool all = true;
        for (EdgeId e : cycle) {
            std::map<VertexId, int> comp;
            int next = 0;
            for (VertexId s : g.vertices()) {
                if (is_x(s) || comp.count(s))
                    continue;
                std::vector<VertexId> stack{s};
                comp[s] = next;
                while (!stack.empty()) {
                    VertexId v = stack.back();
                    stack.pop_back();
                    for (EdgeId h : g.incident_edges(v)) {
                        if (h == e || h == f)
                            continue;
                        VertexId w = g.edge(h).other(v);
                        if (!is_x(w) && !comp.count(w)) {
                            comp[w] = next;
                            stack.push_back(w);
                        }
                    }
                }
                ++next;
            }
            bool found = false;
            for (int c = 0; c < next && !found; ++c) {
                int hit = 0;
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (VertexId w : g.neighbors(x[i]))
                        if (!is_x(w) && comp.at(w) == c) {
                            hit |= 1 << i;
                            break;
                        }
                found = hit == 7;
            }
            if (!found) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

inline bool flexible(const Multigraph& g, const std::vector<VertexId>& x, const std::vector<EdgeId>& cycle,
                     const std::vector<EdgeId>& ins)
{
    std::set<VertexId> on;
    for (EdgeId e : cycle)
        on.insert(g.edge(e).u), on.insert(g.edge(e).v);
    if (std::all_of(x.begin(), x.end(), [&](VertexId v) { return on.count(v); }) || ins.empty())
        return false;
    std::set<EdgeId> kept(cycle.begin(), cycle.end());
    kept.insert(ins.begin(), ins.end());
    int z = 0, single = 0;
    for (VertexId v : on) {
        int out = 0;
        for (EdgeId h : g.incident_edges(v))
            out += !kept.count(h);
        const bool bx = std::find(x.begin(), x.end(), v) != x.end();
        z += bx || out > 0;
        single += !bx && out == 1;
    }
    return z <= 3 && single >= 2;
}

} // namespace oracle
