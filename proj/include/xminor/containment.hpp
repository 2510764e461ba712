#pragma once

#include "connectivity.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "multigraph.hpp"
#include "planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace xminor {

// ---------------------------------------------------------------------------
// Homeomorphic embeddings

/// Witness that `host` contains a subdivision of `pattern`: an injective vertex
/// map and, for every pattern edge, a host path given as an edge sequence
/// starting at the image of the edge's first end.
struct HomeoEmbedding {
    Multigraph pattern;
    Multigraph host;
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, std::vector<EdgeId>> edge_map;
};

/// Vertex sequence of the walk that starts at `start` and follows `edges`,
/// or nullopt if consecutive edges do not meet.
inline std::optional<std::vector<VertexId>> walk_vertices(const Multigraph& h, VertexId start,
                                                          const std::vector<EdgeId>& edges)
{
    std::vector<VertexId> out{start};
    VertexId at = start;
    for (EdgeId id : edges) {
        if (!h.has_edge(id))
            return std::nullopt;
        const Edge& e = h.edge(id);
        if (!e.has_end(at))
            return std::nullopt;
        at = e.other(at);
        out.push_back(at);
    }
    return out;
}

/// V(η(e)) in path order, starting at the image of e's first end.
inline std::vector<VertexId> path_vertices(const HomeoEmbedding& eta, EdgeId e)
{
    const Edge& pe = eta.pattern.edge(e);
    const auto& path = eta.edge_map.at(e);
    auto w = walk_vertices(eta.host, eta.vertex_map.at(pe.u), path);
    if (!w || w->back() != eta.vertex_map.at(pe.v)) {
        w = walk_vertices(eta.host, eta.vertex_map.at(pe.v), path);
        if (w)
            std::reverse(w->begin(), w->end());
    }
    if (!w)
        throw GraphError("edge image is not a walk");
    return *w;
}

/// Describes the first violated embedding condition, or nullopt if η is valid.
/// Throws GraphError when the maps mention ids that do not exist.
inline std::optional<std::string> homeo_violation(const HomeoEmbedding& eta)
{
    const Multigraph& g = eta.pattern;
    const Multigraph& h = eta.host;
    for (const auto& [v, x] : eta.vertex_map) {
        g.require_vertex(v);
        h.require_vertex(x);
    }
    for (const auto& [e, path] : eta.edge_map) {
        g.edge(e);
        for (EdgeId f : path)
            h.edge(f);
    }
    std::set<VertexId> image;
    for (VertexId v : g.vertices()) {
        auto it = eta.vertex_map.find(v);
        if (it == eta.vertex_map.end())
            return "vertex " + std::to_string(v) + " is not mapped";
        if (!image.insert(it->second).second)
            return "vertex map is not injective at host vertex " + std::to_string(it->second);
    }
    std::map<EdgeId, EdgeId> edge_owner;
    std::map<VertexId, std::vector<EdgeId>> vertex_users;
    for (const Edge& pe : g.edges()) {
        auto it = eta.edge_map.find(pe.id);
        if (it == eta.edge_map.end() || it->second.empty())
            return "edge " + std::to_string(pe.id) + " has no image path";
        const VertexId a = eta.vertex_map.at(pe.u), b = eta.vertex_map.at(pe.v);
        auto w = walk_vertices(h, a, it->second);
        if (!w || w->back() != b) {
            w = walk_vertices(h, b, it->second);
            if (!w || w->back() != a)
                return "image of edge " + std::to_string(pe.id) + " is not a walk between the images of its ends";
        }
        std::vector<VertexId> inner(w->begin() + 1, w->end() - 1);
        std::vector<VertexId> all = inner;
        all.push_back(a);
        if (!pe.is_loop())
            all.push_back(b);
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            return "image of edge " + std::to_string(pe.id) + " is not a path";
        for (VertexId x : inner)
            if (image.count(x))
                return "image of edge " + std::to_string(pe.id) + " passes through the image of a vertex";
        for (EdgeId f : it->second)
            if (!edge_owner.emplace(f, pe.id).second)
                return "images of edges " + std::to_string(edge_owner[f]) + " and " + std::to_string(pe.id) +
                       " share host edge " + std::to_string(f);
        for (VertexId x : inner)
            vertex_users[x].push_back(pe.id);
    }
    for (const auto& [x, users] : vertex_users)
        if (users.size() > 1)
            return "images of edges " + std::to_string(users[0]) + " and " + std::to_string(users[1]) +
                   " share internal vertex " + std::to_string(x);
    return std::nullopt;
}

inline bool verify_homeo(const HomeoEmbedding& eta) { return !homeo_violation(eta).has_value(); }

/// V(η(G)) and E(η(G)).
struct EmbeddingImage {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
};

inline EmbeddingImage image_of(const HomeoEmbedding& eta)
{
    EmbeddingImage im;
    for (const auto& [v, x] : eta.vertex_map)
        im.vertices.insert(x);
    for (const auto& [e, path] : eta.edge_map) {
        for (EdgeId f : path) {
            im.edges.insert(f);
            const Edge& he = eta.host.edge(f);
            im.vertices.insert(he.u);
            im.vertices.insert(he.v);
        }
    }
    return im;
}

/// η2 ∘ η1 for η1: G ↪ H and η2: H ↪ K.
inline HomeoEmbedding compose(const HomeoEmbedding& first, const HomeoEmbedding& second)
{
    HomeoEmbedding out{first.pattern, second.host, {}, {}};
    for (const auto& [v, x] : first.vertex_map)
        out.vertex_map[v] = second.vertex_map.at(x);
    for (const Edge& pe : first.pattern.edges()) {
        const auto vs = path_vertices(first, pe.id);
        std::vector<EdgeId> path;
        const auto& hp = first.edge_map.at(pe.id);
        // path_vertices starts at η1(u); walk hp in that direction
        std::vector<EdgeId> ordered = hp;
        if (!walk_vertices(first.host, vs.front(), ordered) ||
            walk_vertices(first.host, vs.front(), ordered)->back() != vs.back())
            std::reverse(ordered.begin(), ordered.end());
        VertexId at = vs.front();
        for (EdgeId he : ordered) {
            auto seg = second.edge_map.at(he);
            const Edge& h_edge = first.host.edge(he);
            const VertexId from = second.vertex_map.at(at);
            auto w = walk_vertices(second.host, from, seg);
            const VertexId to = h_edge.other(at);
            if (!w || w->back() != second.vertex_map.at(to))
                std::reverse(seg.begin(), seg.end());
            path.insert(path.end(), seg.begin(), seg.end());
            at = to;
        }
        out.edge_map[pe.id] = std::move(path);
    }
    return out;
}

/// The identity embedding of a subgraph (given by edges, plus optional extra
/// vertices) into its supergraph.
inline HomeoEmbedding identity_embedding(const Multigraph& host, const std::vector<EdgeId>& edges,
                                         const std::vector<VertexId>& extra_vertices = {})
{
    HomeoEmbedding eta;
    eta.host = host;
    for (VertexId v : extra_vertices)
        if (!eta.pattern.has_vertex(v))
            eta.pattern.add_vertex(v);
    for (EdgeId e : edges) {
        const Edge& he = host.edge(e);
        for (VertexId x : {he.u, he.v})
            if (!eta.pattern.has_vertex(x))
                eta.pattern.add_vertex(x);
        eta.pattern.add_edge_with_id(he.id, he.u, he.v);
        eta.edge_map[he.id] = {he.id};
    }
    for (VertexId v : eta.pattern.vertices())
        eta.vertex_map[v] = v;
    return eta;
}

// ---------------------------------------------------------------------------
// Subdivision search

struct SubdivisionOptions {
    std::size_t budget = 20'000'000;
    /// Pattern vertex -> host vertex assignments the witness must respect.
    std::map<VertexId, VertexId> pins;
};

namespace detail {

class SubdivisionSearch {
public:
    SubdivisionSearch(const Multigraph& pattern, const Multigraph& host, const SubdivisionOptions& opt)
        : p_(pattern), h_(host), hg_(host), budget_(opt.budget, "subdivision search"), pins_(opt.pins)
    {
    }

    std::optional<HomeoEmbedding> run()
    {
        for (const auto& [pv, hv] : pins_) {
            p_.require_vertex(pv);
            h_.require_vertex(hv);
        }
        {
            std::set<VertexId> seen;
            for (const auto& [pv, hv] : pins_)
                if (!seen.insert(hv).second)
                    return std::nullopt;
        }
        if (p_.num_vertices() > h_.num_vertices() || p_.num_edges() > h_.num_edges())
            return std::nullopt;
        build_chains();
        if (!degrees_dominated())
            return std::nullopt;
        if (!is_planar(p_) && is_planar(h_))
            return std::nullopt;
        build_order();
        phi_.assign(branch_.size(), -1);
        used_v_.assign(hg_.num_vertices(), 0);
        used_e_.assign(hg_.num_edges(), 0);
        routes_.assign(chains_.size(), {});
        pending_.assign(branch_.size(), 0);
        for (const Chain& c : chains_) {
            ++pending_[c.a];
            ++pending_[c.b];
        }
        if (!place(0))
            return std::nullopt;
        return witness();
    }

private:
    struct Chain {
        int a = 0, b = 0;             // branch indices, a <= b
        std::vector<EdgeId> edges;    // pattern edges from a to b
        std::vector<VertexId> inner;  // pattern vertices strictly inside
        int twin_prev = -1;           // earlier chain with identical shape
    };
    struct Route {
        std::vector<int> edges; // dense host edges from phi(a)
        std::vector<int> verts; // dense host vertices including both ends
    };

    const Multigraph& p_;
    const Multigraph& h_;
    IndexedGraph hg_;
    Budget budget_;
    std::map<VertexId, VertexId> pins_;

    std::vector<VertexId> branch_;         // pattern ids of branch vertices
    std::map<VertexId, int> branch_index_;
    std::vector<Chain> chains_;
    std::vector<int> order_;               // branch indices in placement order
    std::vector<std::vector<int>> route_at_; // chains routed right after order_[i] is placed
    std::vector<int> phi_;                 // branch index -> dense host vertex
    std::vector<char> used_v_, used_e_;
    std::vector<Route> routes_;
    std::vector<int> pending_;             // unrouted chain ends per branch index

    int pattern_degree(VertexId v) const { return p_.degree(v); }

    void build_chains()
    {
        std::set<VertexId> is_branch;
        for (VertexId v : p_.vertices())
            if (pattern_degree(v) != 2 || pins_.count(v))
                is_branch.insert(v);
        for (const auto& comp : components(p_)) {
            bool has = false;
            for (VertexId v : comp)
                has = has || is_branch.count(v);
            if (!has)
                is_branch.insert(comp.front());
        }
        branch_.assign(is_branch.begin(), is_branch.end());
        for (int i = 0; i < static_cast<int>(branch_.size()); ++i)
            branch_index_[branch_[i]] = i;

        std::set<EdgeId> done;
        for (VertexId a : branch_) {
            for (EdgeId e0 : p_.incident_edges(a)) {
                if (done.count(e0))
                    continue;
                Chain c;
                VertexId at = a;
                EdgeId e = e0;
                while (true) {
                    done.insert(e);
                    c.edges.push_back(e);
                    const VertexId nxt = p_.edge(e).other(at);
                    if (is_branch.count(nxt)) {
                        c.a = branch_index_[a];
                        c.b = branch_index_[nxt];
                        break;
                    }
                    c.inner.push_back(nxt);
                    EdgeId next_e = -1;
                    for (EdgeId f : p_.incident_edges(nxt))
                        if (f != e)
                            next_e = f;
                    at = nxt;
                    e = next_e;
                }
                if (c.a > c.b) {
                    std::swap(c.a, c.b);
                    std::reverse(c.edges.begin(), c.edges.end());
                    std::reverse(c.inner.begin(), c.inner.end());
                }
                chains_.push_back(std::move(c));
            }
        }
        for (std::size_t i = 0; i < chains_.size(); ++i)
            for (std::size_t j = i; j-- > 0;)
                if (chains_[j].a == chains_[i].a && chains_[j].b == chains_[i].b &&
                    chains_[j].edges.size() == chains_[i].edges.size()) {
                    chains_[i].twin_prev = static_cast<int>(j);
                    break;
                }
    }

    bool degrees_dominated() const
    {
        std::vector<int> pd, hd;
        for (VertexId v : branch_)
            pd.push_back(pattern_degree(v));
        for (int x = 0; x < hg_.num_vertices(); ++x)
            hd.push_back(hg_.degree(x));
        std::sort(pd.rbegin(), pd.rend());
        std::sort(hd.rbegin(), hd.rend());
        if (pd.size() > hd.size())
            return false;
        for (std::size_t i = 0; i < pd.size(); ++i)
            if (pd[i] > hd[i])
                return false;
        return true;
    }

    void build_order()
    {
        const int n = static_cast<int>(branch_.size());
        std::vector<char> placed(n, 0);
        auto links = [&](int x) {
            int k = 0;
            for (const Chain& c : chains_)
                if ((c.a == x && placed[c.b]) || (c.b == x && placed[c.a]))
                    ++k;
            return k;
        };
        for (const auto& [pv, hv] : pins_) {
            const int x = branch_index_.at(pv);
            order_.push_back(x);
            placed[x] = 1;
        }
        while (static_cast<int>(order_.size()) < n) {
            int best = -1;
            std::tuple<int, int, int> key{-1, -1, 0};
            for (int x = 0; x < n; ++x) {
                if (placed[x])
                    continue;
                std::tuple<int, int, int> k{links(x), pattern_degree(branch_[x]), -x};
                if (best < 0 || k > key) {
                    best = x;
                    key = k;
                }
            }
            order_.push_back(best);
            placed[best] = 1;
        }
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[order_[i]] = i;
        route_at_.assign(n, {});
        for (int c = 0; c < static_cast<int>(chains_.size()); ++c)
            route_at_[std::max(pos[chains_[c].a], pos[chains_[c].b])].push_back(c);
    }

    /// Unused edges at host vertex x leading to unused vertices (loops count twice).
    int usable_ends(int x) const
    {
        int k = 0;
        for (const auto& arc : hg_.arcs(x))
            if (!used_e_[arc.edge] && (arc.to == x || !used_v_[arc.to]))
                ++k;
        return k;
    }

    bool ends_suffice() const
    {
        for (std::size_t x = 0; x < phi_.size(); ++x)
            if (phi_[x] >= 0 && pending_[x] > 0 && usable_ends(phi_[x]) < pending_[x])
                return false;
        return true;
    }

    std::vector<int> candidates(int x) const
    {
        const VertexId pv = branch_[x];
        std::vector<int> out;
        if (auto it = pins_.find(pv); it != pins_.end()) {
            out.push_back(hg_.index_of(it->second));
            return out;
        }
        for (int y = 0; y < hg_.num_vertices(); ++y)
            out.push_back(y);
        std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return hg_.degree(a) > hg_.degree(b); });
        return out;
    }

    bool place(int i)
    {
        budget_.tick();
        if (i == static_cast<int>(order_.size()))
            return true;
        if (!ends_suffice())
            return false;
        const int x = order_[i];
        const int need = pattern_degree(branch_[x]);
        for (int y : candidates(x)) {
            if (used_v_[y] || hg_.degree(y) < need)
                continue;
            used_v_[y] = 1;
            phi_[x] = y;
            if (route(i, 0))
                return true;
            phi_[x] = -1;
            used_v_[y] = 0;
        }
        return false;
    }

    bool route(int i, std::size_t j)
    {
        if (j == route_at_[i].size())
            return place(i + 1);
        const int ci = route_at_[i][j];
        const Chain& c = chains_[ci];
        const int s = phi_[c.a], t = phi_[c.b];
        const int min_len = static_cast<int>(c.edges.size());
        const int first_floor = c.twin_prev >= 0 ? routes_[c.twin_prev].edges.front() : -1;
        Route r;
        r.verts.push_back(s);
        bool found = false;
        std::function<void(int)> dfs = [&](int v) {
            budget_.tick();
            const auto& arcs = hg_.arcs(v);
            for (std::size_t k = 0; k < arcs.size() && !found; ++k) {
                const auto& arc = arcs[k];
                if (used_e_[arc.edge])
                    continue;
                if (arc.to == v && k > 0 && arcs[k - 1].edge == arc.edge)
                    continue; // second listing of a loop
                if (r.edges.empty() && arc.edge <= first_floor)
                    continue;
                const int len = static_cast<int>(r.edges.size()) + 1;
                if (arc.to == t) {
                    if (len < min_len)
                        continue;
                    if (s == t && len > 1 && r.edges.front() > arc.edge)
                        continue; // each cycle once
                    if (s == t && arc.to == v && len > 1)
                        continue; // a loop cannot close a longer cycle
                    r.edges.push_back(arc.edge);
                    r.verts.push_back(t);
                    used_e_[arc.edge] = 1;
                    routes_[ci] = r;
                    --pending_[c.a];
                    --pending_[c.b];
                    if (route(i, j + 1))
                        found = true;
                    ++pending_[c.a];
                    ++pending_[c.b];
                    used_e_[arc.edge] = 0;
                    r.edges.pop_back();
                    r.verts.pop_back();
                    continue;
                }
                if (used_v_[arc.to] || arc.to == v)
                    continue;
                used_v_[arc.to] = 1;
                used_e_[arc.edge] = 1;
                r.edges.push_back(arc.edge);
                r.verts.push_back(arc.to);
                dfs(arc.to);
                r.edges.pop_back();
                r.verts.pop_back();
                used_e_[arc.edge] = 0;
                used_v_[arc.to] = 0;
            }
        };
        dfs(s);
        return found;
    }

    HomeoEmbedding witness() const
    {
        HomeoEmbedding eta{p_, h_, {}, {}};
        for (std::size_t x = 0; x < branch_.size(); ++x)
            eta.vertex_map[branch_[x]] = hg_.vertex_id(phi_[x]);
        for (std::size_t ci = 0; ci < chains_.size(); ++ci) {
            const Chain& c = chains_[ci];
            const Route& r = routes_[ci];
            const std::size_t len = c.edges.size();
            for (std::size_t k = 0; k + 1 < len; ++k)
                eta.vertex_map[c.inner[k]] = hg_.vertex_id(r.verts[k + 1]);
            for (std::size_t k = 0; k < len; ++k) {
                std::vector<EdgeId> seg;
                const std::size_t last = k + 1 < len ? k + 1 : r.edges.size();
                for (std::size_t q = k; q < last; ++q)
                    seg.push_back(hg_.edge_id(r.edges[q]));
                eta.edge_map[c.edges[k]] = std::move(seg);
            }
        }
        // orient every image from the image of the edge's first end
        for (const Edge& pe : p_.edges()) {
            auto& seg = eta.edge_map[pe.id];
            auto w = walk_vertices(h_, eta.vertex_map.at(pe.u), seg);
            if (!w || w->back() != eta.vertex_map.at(pe.v))
                std::reverse(seg.begin(), seg.end());
        }
        return eta;
    }
};

} // namespace detail

/// Complete backtracking search for a subdivision of `pattern` inside `host`.
/// Returns nullopt only when none exists; throws BudgetExceeded when the node
/// budget runs out first.
inline std::optional<HomeoEmbedding> find_subdivision(const Multigraph& pattern, const Multigraph& host,
                                                      const SubdivisionOptions& opt = {})
{
    detail::SubdivisionSearch s(pattern, host, opt);
    return s.run();
}

// ---------------------------------------------------------------------------
// Minors

/// Branch sets and one host edge per pattern edge.
struct MinorModel {
    Multigraph pattern;
    Multigraph host;
    std::map<VertexId, std::vector<VertexId>> branch_sets;
    std::map<EdgeId, EdgeId> edge_assign;
};

inline std::optional<std::string> minor_violation(const MinorModel& m)
{
    std::map<VertexId, VertexId> owner;
    for (VertexId p : m.pattern.vertices()) {
        auto it = m.branch_sets.find(p);
        if (it == m.branch_sets.end() || it->second.empty())
            return "pattern vertex " + std::to_string(p) + " has no branch set";
        for (VertexId x : it->second) {
            m.host.require_vertex(x);
            if (!owner.emplace(x, p).second)
                return "branch sets overlap at host vertex " + std::to_string(x);
        }
    }
    std::set<EdgeId> used;
    std::map<VertexId, std::set<EdgeId>> loop_edges;
    for (const Edge& pe : m.pattern.edges()) {
        auto it = m.edge_assign.find(pe.id);
        if (it == m.edge_assign.end())
            return "pattern edge " + std::to_string(pe.id) + " is not assigned";
        if (!used.insert(it->second).second)
            return "host edge " + std::to_string(it->second) + " assigned twice";
        const Edge& he = m.host.edge(it->second);
        auto ou = owner.find(he.u), ov = owner.find(he.v);
        if (ou == owner.end() || ov == owner.end())
            return "host edge " + std::to_string(he.id) + " leaves the branch sets";
        const bool ok = (ou->second == pe.u && ov->second == pe.v) || (ou->second == pe.v && ov->second == pe.u);
        if (!ok)
            return "host edge " + std::to_string(he.id) + " does not join the branch sets of edge " +
                   std::to_string(pe.id);
        if (pe.is_loop())
            loop_edges[pe.u].insert(he.id);
    }
    for (const auto& [p, set] : m.branch_sets) {
        m.pattern.require_vertex(p);
        Multigraph inside = restrict_to(m.host, set);
        for (EdgeId e : loop_edges[p])
            inside.remove_edge(e);
        if (!is_connected(inside))
            return "branch set of " + std::to_string(p) + " is not connected without its loop edges";
    }
    return std::nullopt;
}

inline bool verify_minor(const MinorModel& m) { return !minor_violation(m).has_value(); }

struct MinorOptions {
    std::size_t budget = 50'000'000;
};

namespace detail {

class MinorSearch {
public:
    MinorSearch(const Multigraph& pattern, const Multigraph& host, const MinorOptions& opt)
        : p_(pattern), h_(host), pg_(pattern), hg_(host), budget_(opt.budget, "minor search")
    {
    }

    std::optional<MinorModel> run()
    {
        const int np = pg_.num_vertices(), nh = hg_.num_vertices();
        if (np > nh || p_.num_edges() > h_.num_edges())
            return std::nullopt;
        if (!is_planar(p_) && is_planar(h_))
            return std::nullopt;
        mult_.assign(np, std::vector<int>(np, 0));
        loops_.assign(np, 0);
        for (int e = 0; e < pg_.num_edges(); ++e) {
            auto [a, b] = pg_.ends(e);
            if (a == b)
                ++loops_[a];
            else
                ++mult_[a][b], ++mult_[b][a];
        }
        hmult_.assign(nh, std::vector<int>(nh, 0));
        int max_deg = 0;
        for (int e = 0; e < hg_.num_edges(); ++e) {
            auto [a, b] = hg_.ends(e);
            if (a != b)
                ++hmult_[a][b], ++hmult_[b][a];
        }
        for (int x = 0; x < nh; ++x)
            max_deg = std::max(max_deg, hg_.degree(x));
        min_size_.assign(np, 1);
        for (int v = 0; v < np; ++v) {
            int d = 0;
            for (int w = 0; w < np; ++w)
                d += mult_[v][w];
            const int need = d + 2 * loops_[v];
            if (max_deg > 2 && need > max_deg)
                min_size_[v] = std::max(1, (need - 2 + (max_deg - 2) - 1) / (max_deg - 2));
        }
        build_order();
        owner_.assign(nh, -1);
        sets_.assign(np, {});
        placed_.assign(np, 0);
        if (!place(0))
            return std::nullopt;
        return witness();
    }

private:
    const Multigraph& p_;
    const Multigraph& h_;
    IndexedGraph pg_, hg_;
    Budget budget_;
    std::vector<std::vector<int>> mult_, hmult_;
    std::vector<int> loops_, min_size_, order_, owner_;
    std::vector<char> placed_;
    std::vector<std::vector<int>> sets_;

    void build_order()
    {
        const int np = pg_.num_vertices();
        std::vector<char> in(np, 0);
        auto degree = [&](int v) { return pg_.degree(v); };
        while (static_cast<int>(order_.size()) < np) {
            int best = -1;
            std::tuple<int, int, int> key{};
            for (int v = 0; v < np; ++v) {
                if (in[v])
                    continue;
                int links = 0;
                for (int w = 0; w < np; ++w)
                    if (in[w])
                        links += mult_[v][w];
                std::tuple<int, int, int> k{links, degree(v), -v};
                if (best < 0 || k > key) {
                    best = v;
                    key = k;
                }
            }
            order_.push_back(best);
            in[best] = 1;
        }
    }

    /// Pattern edges from p to vertices not yet placed (p excluded).
    int open_demand(int p, int skip) const
    {
        int d = 0;
        for (int w = 0; w < pg_.num_vertices(); ++w)
            if (!placed_[w] && w != p && w != skip)
                d += mult_[p][w];
        return d;
    }

    bool place(int i)
    {
        const int np = pg_.num_vertices(), nh = hg_.num_vertices();
        if (i == np)
            return true;
        const int p = order_[i];
        int free_count = 0;
        for (int x = 0; x < nh; ++x)
            free_count += owner_[x] < 0;
        int reserve = 0;
        for (int k = i + 1; k < np; ++k)
            reserve += min_size_[order_[k]];
        const int max_size = free_count - reserve;
        std::vector<int> set;
        for (int size = min_size_[p]; size <= max_size; ++size) {
            for (int root = 0; root < nh; ++root) {
                if (owner_[root] >= 0)
                    continue;
                set.assign(1, root);
                std::vector<int> ext;
                for (const auto& arc : hg_.arcs(root))
                    if (arc.to > root && owner_[arc.to] < 0 &&
                        std::find(ext.begin(), ext.end(), arc.to) == ext.end())
                        ext.push_back(arc.to);
                if (extend(i, p, size, root, set, ext))
                    return true;
            }
        }
        return false;
    }

    bool in_closed_nbhd(const std::vector<int>& set, int w) const
    {
        for (int x : set)
            if (x == w || hmult_[x][w] > 0)
                return true;
        return false;
    }

    // ESU enumeration: every connected set with minimum element `root` exactly once.
    bool extend(int i, int p, int size, int root, std::vector<int>& set, std::vector<int> ext)
    {
        if (static_cast<int>(set.size()) == size)
            return try_set(i, p, set);
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (const auto& arc : hg_.arcs(w)) {
                const int u = arc.to;
                if (u > root && owner_[u] < 0 && !in_closed_nbhd(set, u) &&
                    std::find(next.begin(), next.end(), u) == next.end())
                    next.push_back(u);
            }
            set.push_back(w);
            if (extend(i, p, size, root, set, next))
                return true;
            set.pop_back();
        }
        return false;
    }

    bool try_set(int i, int p, const std::vector<int>& set)
    {
        budget_.tick();
        const int np = pg_.num_vertices(), nh = hg_.num_vertices();
        std::vector<char> in(nh, 0);
        for (int x : set)
            in[x] = 1;
        // edges from the set to each placed branch set, to free vertices, and inside
        std::vector<int> to_set(np, 0);
        int to_free = 0, inside = 0;
        for (int x : set)
            for (const auto& arc : hg_.arcs(x)) {
                if (in[arc.to])
                    ++inside;
                else if (owner_[arc.to] >= 0)
                    ++to_set[owner_[arc.to]];
                else
                    ++to_free;
            }
        inside /= 2; // each internal edge (loops included) seen from both ends
        for (int q = 0; q < np; ++q)
            if (placed_[q] && to_set[q] < mult_[p][q])
                return false;
        if (inside - (static_cast<int>(set.size()) - 1) < loops_[p])
            return false;
        if (to_free < open_demand(p, -1))
            return false;
        // placed sets must still reach their unplaced neighbours through free vertices
        for (int q = 0; q < np; ++q) {
            if (!placed_[q])
                continue;
            const int need = open_demand(q, p);
            if (need == 0)
                continue;
            int avail = 0;
            for (int x : sets_[q])
                for (const auto& arc : hg_.arcs(x))
                    if (owner_[arc.to] < 0 && !in[arc.to])
                        ++avail;
            if (avail < need)
                return false;
        }
        for (int x : set)
            owner_[x] = p;
        sets_[p] = set;
        placed_[p] = 1;
        if (place(i + 1))
            return true;
        placed_[p] = 0;
        sets_[p].clear();
        for (int x : set)
            owner_[x] = -1;
        return false;
    }

    MinorModel witness() const
    {
        MinorModel m{p_, h_, {}, {}};
        const int np = pg_.num_vertices();
        for (int p = 0; p < np; ++p) {
            auto& out = m.branch_sets[pg_.vertex_id(p)];
            for (int x : sets_[p])
                out.push_back(hg_.vertex_id(x));
            std::sort(out.begin(), out.end());
        }
        std::set<int> taken;
        // spanning-tree edges of every set are kept for connectivity
        std::set<int> tree;
        for (int p = 0; p < np; ++p) {
            std::set<int> reached{sets_[p].front()};
            std::vector<int> stack{sets_[p].front()};
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (const auto& arc : hg_.arcs(x))
                    if (owner_[arc.to] == p && !reached.count(arc.to)) {
                        reached.insert(arc.to);
                        tree.insert(arc.edge);
                        stack.push_back(arc.to);
                    }
            }
        }
        for (int e = 0; e < pg_.num_edges(); ++e) {
            auto [a, b] = pg_.ends(e);
            for (int he = 0; he < hg_.num_edges(); ++he) {
                if (taken.count(he) || tree.count(he))
                    continue;
                auto [x, y] = hg_.ends(he);
                const int ox = owner_[x], oy = owner_[y];
                if ((ox == a && oy == b) || (ox == b && oy == a)) {
                    taken.insert(he);
                    m.edge_assign[pg_.edge_id(e)] = hg_.edge_id(he);
                    break;
                }
            }
        }
        return m;
    }
};

} // namespace detail

/// Complete branch-set search for a minor model of `pattern` in `host`.
inline std::optional<MinorModel> find_minor(const Multigraph& pattern, const Multigraph& host,
                                            const MinorOptions& opt = {})
{
    detail::MinorSearch s(pattern, host, opt);
    return s.run();
}

// ---------------------------------------------------------------------------
// Bridges

struct EtaBridge {
    std::vector<EdgeId> edges;         // sorted
    std::vector<VertexId> interior;    // vertices of B off η(G), sorted
    std::vector<VertexId> attachments; // V(B) ∩ V(η(G)), sorted
    bool stable = false;
};

/// True iff some pattern edge e has every attachment in V(η(e)).
inline bool attachments_in_one_edge(const HomeoEmbedding& eta, const std::vector<VertexId>& attachments)
{
    for (const Edge& pe : eta.pattern.edges()) {
        auto vs = path_vertices(eta, pe.id);
        std::sort(vs.begin(), vs.end());
        if (std::includes(vs.begin(), vs.end(), attachments.begin(), attachments.end()))
            return true;
    }
    return false;
}

/// The η-bridges of the host: chords of η(G) and the edge sets hanging off the
/// components of H − V(η(G)).
inline std::vector<EtaBridge> eta_bridges(const HomeoEmbedding& eta)
{
    if (auto bad = homeo_violation(eta))
        throw GraphError("invalid embedding: " + *bad);
    const auto im = image_of(eta);
    const Multigraph& h = eta.host;
    std::vector<EtaBridge> out;
    for (const Edge& e : h.edges())
        if (!im.edges.count(e.id) && im.vertices.count(e.u) && im.vertices.count(e.v)) {
            EtaBridge b;
            b.edges = {e.id};
            b.attachments = {std::min(e.u, e.v), std::max(e.u, e.v)};
            b.attachments.erase(std::unique(b.attachments.begin(), b.attachments.end()), b.attachments.end());
            out.push_back(std::move(b));
        }
    const auto rest = delete_vertices(h, std::vector<VertexId>(im.vertices.begin(), im.vertices.end()));
    for (const auto& comp : components(rest)) {
        EtaBridge b;
        b.interior = comp;
        std::set<VertexId> att;
        for (const Edge& e : h.edges()) {
            const bool a = std::binary_search(comp.begin(), comp.end(), e.u);
            const bool c = std::binary_search(comp.begin(), comp.end(), e.v);
            if (!a && !c)
                continue;
            b.edges.push_back(e.id);
            if (!a)
                att.insert(e.u);
            if (!c)
                att.insert(e.v);
        }
        b.attachments.assign(att.begin(), att.end());
        out.push_back(std::move(b));
    }
    for (auto& b : out)
        b.stable = !attachments_in_one_edge(eta, b.attachments);
    std::sort(out.begin(), out.end(), [](const EtaBridge& a, const EtaBridge& b) { return a.edges < b.edges; });
    return out;
}

/// C-bridges: η-bridges of the identity embedding of the subgraph C.
inline std::vector<EtaBridge> c_bridges(const Multigraph& g, const std::vector<EdgeId>& c)
{
    return eta_bridges(identity_embedding(g, c));
}

// ---------------------------------------------------------------------------
// Stabilization

struct StabilizeOptions {
    std::size_t max_states = 20'000;
    bool check_hypothesis = true; // host simple and 3-connected
};

class StabilizationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reroutes edge images through unstable bridges until every bridge is stable.
/// A reroute replaces the segment of η(e) between two attachments of a bridge
/// whose attachments all lie on η(e) by a path through that bridge. States are
/// explored best-first on (unstable bridges, image size). Vertex images never move.
inline HomeoEmbedding stabilize(const HomeoEmbedding& eta, const StabilizeOptions& opt = {})
{
    if (auto bad = homeo_violation(eta))
        throw GraphError("invalid embedding: " + *bad);
    if (opt.check_hypothesis && (!eta.host.is_simple() || !is_k_connected(eta.host, 3)))
        throw PreconditionError("stabilize needs a simple 3-connected host");

    struct State {
        int unstable;
        std::size_t size;
        std::map<EdgeId, std::vector<EdgeId>> edge_map;
    };
    auto score = [&](const HomeoEmbedding& x) {
        int u = 0;
        for (const auto& b : eta_bridges(x))
            u += !b.stable;
        std::size_t s = 0;
        for (const auto& [e, p] : x.edge_map)
            s += p.size();
        return std::pair{u, s};
    };
    auto cmp = [](const State& a, const State& b) {
        return std::tie(a.unstable, a.size, a.edge_map) > std::tie(b.unstable, b.size, b.edge_map);
    };
    std::priority_queue<State, std::vector<State>, decltype(cmp)> open(cmp);
    std::set<std::map<EdgeId, std::vector<EdgeId>>> seen;
    {
        auto [u, s] = score(eta);
        open.push(State{u, s, eta.edge_map});
        seen.insert(eta.edge_map);
    }
    std::size_t expanded = 0;
    while (!open.empty()) {
        State st = open.top();
        open.pop();
        HomeoEmbedding cur{eta.pattern, eta.host, eta.vertex_map, st.edge_map};
        if (st.unstable == 0)
            return cur;
        if (++expanded > opt.max_states)
            throw BudgetExceeded("stabilize: state cap of " + std::to_string(opt.max_states) + " reached");
        for (const auto& b : eta_bridges(cur)) {
            if (b.stable || b.attachments.size() < 2)
                continue;
            for (const Edge& pe : eta.pattern.edges()) {
                const auto vs = path_vertices(cur, pe.id);
                std::map<VertexId, std::size_t> pos;
                for (std::size_t k = 0; k < vs.size(); ++k)
                    pos[vs[k]] = k;
                if (!std::all_of(b.attachments.begin(), b.attachments.end(), [&](VertexId a) { return pos.count(a); }))
                    continue;
                // ordered edge list of η(e) from vs.front()
                std::vector<EdgeId> path = cur.edge_map.at(pe.id);
                if (auto w = walk_vertices(eta.host, vs.front(), path); !w || *w != vs)
                    std::reverse(path.begin(), path.end());
                std::set<EdgeId> bridge_edges(b.edges.begin(), b.edges.end());
                std::set<VertexId> interior(b.interior.begin(), b.interior.end());
                for (std::size_t i = 0; i < b.attachments.size(); ++i)
                    for (std::size_t j = i + 1; j < b.attachments.size(); ++j) {
                        VertexId x = b.attachments[i], y = b.attachments[j];
                        if (pos[x] > pos[y])
                            std::swap(x, y);
                        // shortest x-y path inside the bridge
                        std::map<VertexId, std::pair<VertexId, EdgeId>> prev;
                        std::queue<VertexId> q;
                        q.push(x);
                        prev[x] = {x, -1};
                        while (!q.empty() && !prev.count(y)) {
                            const VertexId v = q.front();
                            q.pop();
                            if (v != x && !interior.count(v))
                                continue;
                            for (EdgeId f : eta.host.incident_edges(v)) {
                                if (!bridge_edges.count(f))
                                    continue;
                                const VertexId w = eta.host.edge(f).other(v);
                                if (prev.count(w) || (w != y && !interior.count(w)))
                                    continue;
                                prev[w] = {v, f};
                                q.push(w);
                            }
                        }
                        if (!prev.count(y))
                            continue;
                        std::vector<EdgeId> detour;
                        for (VertexId v = y; v != x; v = prev[v].first)
                            detour.push_back(prev[v].second);
                        std::reverse(detour.begin(), detour.end());
                        std::vector<EdgeId> np(path.begin(), path.begin() + static_cast<long>(pos[x]));
                        np.insert(np.end(), detour.begin(), detour.end());
                        np.insert(np.end(), path.begin() + static_cast<long>(pos[y]), path.end());
                        auto next_map = st.edge_map;
                        next_map[pe.id] = np;
                        if (!seen.insert(next_map).second)
                            continue;
                        HomeoEmbedding nxt{eta.pattern, eta.host, eta.vertex_map, next_map};
                        if (!verify_homeo(nxt))
                            continue;
                        auto [u, s] = score(nxt);
                        open.push(State{u, s, std::move(next_map)});
                    }
            }
        }
    }
    throw StabilizationFailed("stabilize: no sequence of reroutes removes every unstable bridge");
}

// ---------------------------------------------------------------------------
// η-crosses

struct EtaCross {
    std::vector<EdgeId> path1, path2; // host edges
    VertexId u1, v1, u2, v2;          // feet: u1, u2, v1, v2 occur on η(C) in this order
    bool free = false;
};

/// A path with both ends on η(G), otherwise disjoint from it.
inline bool is_eta_path(const HomeoEmbedding& eta, VertexId start, const std::vector<EdgeId>& path)
{
    const auto im = image_of(eta);
    auto w = walk_vertices(eta.host, start, path);
    if (!w || path.empty())
        return false;
    auto vs = *w;
    if (!im.vertices.count(vs.front()) || !im.vertices.count(vs.back()))
        return false;
    for (std::size_t k = 1; k + 1 < vs.size(); ++k)
        if (im.vertices.count(vs[k]))
            return false;
    for (EdgeId e : path)
        if (im.edges.count(e))
            return false;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

/// Evaluates (F1) and (F2) for the cross with the given feet and path ends.
inline bool is_free_cross(const HomeoEmbedding& eta, const EtaCross& x)
{
    std::vector<std::vector<VertexId>> images;
    for (const Edge& pe : eta.pattern.edges()) {
        auto vs = path_vertices(eta, pe.id);
        std::sort(vs.begin(), vs.end());
        images.push_back(std::move(vs));
    }
    auto has = [](const std::vector<VertexId>& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
    for (const auto& s : images)
        if ((has(s, x.u1) && has(s, x.v1)) || (has(s, x.u2) && has(s, x.v2)))
            return false;
    const auto pedges = eta.pattern.edges();
    for (std::size_t i = 0; i < pedges.size(); ++i)
        for (std::size_t j = 0; j < pedges.size(); ++j) {
            bool covers = true;
            for (VertexId f : {x.u1, x.v1, x.u2, x.v2})
                covers = covers && (has(images[i], f) || has(images[j], f));
            if (!covers)
                continue;
            const Edge& a = pedges[i];
            const Edge& b = pedges[j];
            if (a.has_end(b.u) || a.has_end(b.v))
                return false;
        }
    return true;
}

/// Searches two disjoint η-paths whose ends interleave on η(C); prefers a free
/// cross. C must be a peripheral cycle of the pattern.
inline std::optional<EtaCross> find_eta_cross(const HomeoEmbedding& eta, const std::vector<EdgeId>& c,
                                              std::size_t max_paths = 200'000)
{
    if (!is_peripheral(eta.pattern, c))
        throw GraphError("find_eta_cross needs a peripheral cycle of the pattern");
    if (auto bad = homeo_violation(eta))
        throw GraphError("invalid embedding: " + *bad);
    const auto im = image_of(eta);
    std::vector<EdgeId> image_c;
    for (EdgeId e : c)
        for (EdgeId f : eta.edge_map.at(e))
            image_c.push_back(f);
    const auto walk = require_cycle(eta.host, image_c);
    std::map<VertexId, int> pos;
    for (std::size_t k = 0; k < walk.vertices.size(); ++k)
        pos[walk.vertices[k]] = static_cast<int>(k);

    struct Found {
        std::vector<EdgeId> edges;
        std::vector<VertexId> verts;
    };
    std::vector<Found> paths;
    const Multigraph& h = eta.host;
    for (VertexId s : walk.vertices) {
        std::vector<EdgeId> pe;
        std::vector<VertexId> pv{s};
        std::set<VertexId> on{s};
        std::function<void(VertexId)> dfs = [&](VertexId v) {
            for (EdgeId f : h.incident_edges(v)) {
                if (im.edges.count(f) || (!pe.empty() && pe.back() == f))
                    continue;
                const Edge& he = h.edge(f);
                if (he.is_loop())
                    continue;
                const VertexId w = he.other(v);
                if (on.count(w))
                    continue;
                if (im.vertices.count(w)) {
                    if (pos.count(w) && w > s) {
                        if (paths.size() >= max_paths)
                            throw BudgetExceeded("find_eta_cross: path cap reached");
                        Found fp{pe, pv};
                        fp.edges.push_back(f);
                        fp.verts.push_back(w);
                        paths.push_back(std::move(fp));
                    }
                    continue;
                }
                on.insert(w);
                pe.push_back(f);
                pv.push_back(w);
                dfs(w);
                pv.pop_back();
                pe.pop_back();
                on.erase(w);
            }
        };
        dfs(s);
    }
    const int n = static_cast<int>(walk.vertices.size());
    auto between = [&](int a, int b, int x) { // x strictly inside the arc a -> b
        const int dx = ((x - a) % n + n) % n, db = ((b - a) % n + n) % n;
        return dx > 0 && dx < db;
    };
    std::optional<EtaCross> first;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& a = paths[i];
            const auto& b = paths[j];
            std::set<VertexId> va(a.verts.begin(), a.verts.end());
            if (std::any_of(b.verts.begin(), b.verts.end(), [&](VertexId v) { return va.count(v); }))
                continue;
            const int a0 = pos[a.verts.front()], a1 = pos[a.verts.back()];
            const int b0 = pos[b.verts.front()], b1 = pos[b.verts.back()];
            if (between(a0, a1, b0) == between(a0, a1, b1))
                continue;
            EtaCross x{a.edges, b.edges, a.verts.front(), a.verts.back(), b.verts.front(), b.verts.back(), false};
            if (!between(a0, a1, b0))
                std::swap(x.u2, x.v2), std::reverse(x.path2.begin(), x.path2.end());
            x.free = is_free_cross(eta, x);
            if (x.free)
                return x;
            if (!first)
                first = x;
        }
    return first;
}

} // namespace xminor
