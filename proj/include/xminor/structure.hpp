#pragma once

#include "connectivity.hpp"
#include "containment.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "multigraph.hpp"
#include "planarity.hpp"

#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace xminor {

// ---------------------------------------------------------------------------
// Connectivity-flavoured predicates

/// No separation (A,B) of order <= 2 with x1, x2, x3 in A and B - A nonempty.
/// Equivalently every other vertex has a fan of three paths onto {x1,x2,x3}.
inline bool internally_3_connected(const Multigraph& g, VertexId x1, VertexId x2, VertexId x3)
{
    for (VertexId x : {x1, x2, x3})
        g.require_vertex(x);
    if (x1 == x2 || x2 == x3 || x1 == x3)
        throw GraphError("internally_3_connected needs three distinct vertices");
    IndexedGraph ig(g);
    const std::vector<int> targets{ig.index_of(x1), ig.index_of(x2), ig.index_of(x3)};
    for (int v = 0; v < ig.num_vertices(); ++v) {
        if (std::find(targets.begin(), targets.end(), v) != targets.end())
            continue;
        if (fan_size(ig, v, targets, 3) < 3)
            return false;
    }
    return true;
}

/// 3-connected, and every separation of order three has a side with at most
/// one private vertex.
inline bool is_almost_4_connected(const Multigraph& g)
{
    if (!is_k_connected(g, 3))
        return false;
    for (const auto& s : enumerate_separations(g, 3))
        if (s.order() == 3 && s.a_only().size() >= 2 && s.b_only().size() >= 2)
            return false;
    return true;
}

struct ShallowResult {
    bool shallow = true;
    std::optional<Separation> violation;
};

/// Every separation of order <= 3 has a side with fewer than t vertices that
/// embeds in a disk with the separator on the boundary.
inline ShallowResult is_t_shallow(const Multigraph& g, int t, const SeparationOptions& opt = {})
{
    if (t < 4)
        throw GraphError("is_t_shallow needs t >= 4");
    auto side_ok = [&](const std::vector<VertexId>& side, const std::vector<VertexId>& sep) {
        if (static_cast<int>(side.size()) >= t)
            return false;
        return disk_embeddable(restrict_to(g, side), sep).has_value();
    };
    for (const auto& s : enumerate_separations(g, 3, opt)) {
        const auto sep = s.separator();
        if (side_ok(s.side_a, sep) || side_ok(s.side_b, sep))
            continue;
        return ShallowResult{false, s};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Plane graphs in a disk with three boundary vertices

struct BoundaryContext {
    PlaneGraph plane;
    std::array<VertexId, 3> x;

    const Multigraph& graph() const { return plane.graph; }
    bool is_boundary(VertexId v) const { return v == x[0] || v == x[1] || v == x[2]; }
};

inline std::optional<std::string> context_violation(const BoundaryContext& ctx)
{
    const Multigraph& g = ctx.graph();
    for (VertexId v : ctx.x)
        if (!g.has_vertex(v))
            return "boundary vertex " + std::to_string(v) + " is not in the graph";
    if (ctx.x[0] == ctx.x[1] || ctx.x[1] == ctx.x[2] || ctx.x[0] == ctx.x[2])
        return "boundary vertices are not distinct";
    if (g.has_loops())
        return "graph has a loop";
    if (!is_valid_embedding(ctx.plane))
        return "rotation system is not a plane embedding";
    const auto outer = outer_face_vertices(ctx.plane);
    for (VertexId v : ctx.x)
        if (!std::binary_search(outer.begin(), outer.end(), v))
            return "boundary vertex " + std::to_string(v) + " is not on the outer face";
    if (!internally_3_connected(g, ctx.x[0], ctx.x[1], ctx.x[2]))
        return "graph is not internally 3-connected";
    return std::nullopt;
}

/// Embeds g in a disk with x on the boundary; throws PreconditionError if the
/// result violates the context invariants.
inline BoundaryContext make_context(const Multigraph& g, std::array<VertexId, 3> x)
{
    auto pg = disk_embeddable(g, {x[0], x[1], x[2]});
    if (!pg)
        throw PreconditionError("graph has no disk embedding with the three vertices on the boundary");
    BoundaryContext ctx{std::move(*pg), x};
    if (auto bad = context_violation(ctx))
        throw PreconditionError("boundary context: " + *bad);
    return ctx;
}

struct RobustWitness {
    std::vector<EdgeId> cycle;
    EdgeId f = -1;
};

struct FlexibleWitness {
    std::vector<EdgeId> cycle;
    std::vector<VertexId> z;
};

enum class CycleKind { Robust, Flexible };

inline const char* to_string(CycleKind k) { return k == CycleKind::Robust ? "robust" : "flexible"; }

/// A robust or flexible cycle together with its interior.
struct CycleWitness {
    CycleKind kind = CycleKind::Robust;
    std::vector<EdgeId> cycle; // sorted
    std::vector<EdgeId> ins;   // sorted
    std::optional<EdgeId> f;   // robust only
    std::vector<VertexId> z;   // flexible only
    bool exhaustive = false;   // maximality checked against every cycle of G
};

namespace detail {

/// Cached data for evaluating many cycles of one context.
class ContextIndex {
public:
    explicit ContextIndex(const BoundaryContext& ctx) : ctx_(ctx), ig_(ctx.graph())
    {
        if (!ctx.plane.outer)
            throw GraphError("boundary context has no outer face");
        const FaceSet faces(ctx.plane);
        outer_face_ = faces.face_of(*ctx.plane.outer);
        face_links_.resize(faces.faces().size());
        for (std::size_t f = 0; f < faces.faces().size(); ++f)
            for (Dart d : faces.faces()[f])
                face_links_[f].emplace_back(ig_.edge_index_of(d.edge), faces.face_of(d.twin()));
        edge_face_.resize(ig_.num_edges());
        for (int k = 0; k < ig_.num_edges(); ++k)
            edge_face_[k] = faces.face_of(Dart{ig_.edge_id(k), 0});
        for (int i = 0; i < 3; ++i)
            xi_[i] = ig_.index_of(ctx.x[i]);
        nbr_mask_.assign(ig_.num_vertices(), 0);
        for (int i = 0; i < 3; ++i)
            for (const auto& arc : ig_.arcs(xi_[i]))
                nbr_mask_[arc.to] |= 1 << i;
        for (int i = 0; i < 3; ++i)
            nbr_mask_[xi_[i]] = 0;
        for (int k = 0; k < ig_.num_edges(); ++k)
            solo_ok_.push_back(joined(k, -1));
    }

    const BoundaryContext& ctx() const { return ctx_; }
    const IndexedGraph& indexed() const { return ig_; }

    std::vector<EdgeId> ins(const std::vector<EdgeId>& cycle) const
    {
        std::vector<char> on(ig_.num_edges(), 0);
        for (EdgeId e : cycle)
            on[ig_.edge_index_of(e)] = 1;
        std::vector<char> reached(face_links_.size(), 0);
        std::vector<int> stack{outer_face_};
        reached[outer_face_] = 1;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (auto [k, h] : face_links_[f])
                if (!on[k] && !reached[h]) {
                    reached[h] = 1;
                    stack.push_back(h);
                }
        }
        std::vector<EdgeId> out;
        for (int k = 0; k < ig_.num_edges(); ++k)
            if (!on[k] && !reached[edge_face_[k]])
                out.push_back(ig_.edge_id(k));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Does G - X - e - f have a component with a neighbour of every x_i?
    bool joined(int e, int f) const
    {
        const int n = ig_.num_vertices();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int k = 0; k < ig_.num_edges(); ++k) {
            if (k == e || k == f)
                continue;
            auto [a, b] = ig_.ends(k);
            if (is_x(a) || is_x(b))
                continue;
            parent[find(a)] = find(b);
        }
        std::vector<int> mask(n, 0);
        for (int v = 0; v < n; ++v)
            if (!is_x(v) && (mask[find(v)] |= nbr_mask_[v]) == 7)
                return true;
        return false;
    }

    /// Deleting f as well only makes things worse, so an edge that already
    /// fails on its own rules out every cycle through it.
    bool may_be_robust(const std::vector<EdgeId>& cycle) const
    {
        return std::all_of(cycle.begin(), cycle.end(), [&](EdgeId e) { return solo_ok_[ig_.edge_index_of(e)]; });
    }

    bool is_x(int v) const { return v == xi_[0] || v == xi_[1] || v == xi_[2]; }

    /// The preamble shared by both definitions: X not inside V(C), ins(C) nonempty.
    bool eligible(const CycleWalk& w, const std::vector<EdgeId>& ins_c) const
    {
        int hits = 0;
        for (VertexId v : w.vertices)
            hits += ctx_.is_boundary(v);
        return hits < 3 && !ins_c.empty();
    }

    std::optional<EdgeId> robust_f(const CycleWalk& w, const std::vector<EdgeId>& ins_c) const
    {
        if (!may_be_robust(w.edges))
            return std::nullopt;
        for (EdgeId f : ins_c) {
            const int fi = ig_.edge_index_of(f);
            bool all = true;
            for (EdgeId e : w.edges)
                if (!joined(ig_.edge_index_of(e), fi)) {
                    all = false;
                    break;
                }
            if (all)
                return f;
        }
        return std::nullopt;
    }

    std::optional<std::vector<VertexId>> flexible_z(const CycleWalk& w, const std::vector<EdgeId>& ins_c) const
    {
        std::set<EdgeId> kept(w.edges.begin(), w.edges.end());
        kept.insert(ins_c.begin(), ins_c.end());
        std::vector<VertexId> z;
        int single = 0;
        for (VertexId v : w.vertices) {
            int outside = 0;
            for (const auto& arc : ig_.arcs(ig_.index_of(v)))
                outside += !kept.count(ig_.edge_id(arc.edge));
            if (ctx_.is_boundary(v) || outside > 0)
                z.push_back(v);
            if (!ctx_.is_boundary(v) && outside == 1)
                ++single;
        }
        std::sort(z.begin(), z.end());
        if (z.size() <= 3 && single >= 2)
            return z;
        return std::nullopt;
    }

    std::optional<CycleWitness> classify(const std::vector<EdgeId>& cycle) const
    {
        const auto w = as_cycle(ctx_.graph(), cycle);
        if (!w)
            throw GraphError("edge set is not a cycle of the graph");
        auto ins_c = ins(cycle);
        if (!eligible(*w, ins_c))
            return std::nullopt;
        std::vector<EdgeId> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (auto f = robust_f(*w, ins_c))
            return CycleWitness{CycleKind::Robust, sorted, ins_c, f, {}};
        if (auto z = flexible_z(*w, ins_c))
            return CycleWitness{CycleKind::Flexible, sorted, ins_c, std::nullopt, *z};
        return std::nullopt;
    }

private:
    const BoundaryContext& ctx_;
    IndexedGraph ig_;
    int outer_face_ = 0;
    std::vector<std::vector<std::pair<int, int>>> face_links_; // (edge index, face across it)
    std::vector<int> edge_face_;                               // face on one side of each edge
    std::array<int, 3> xi_{};
    std::vector<int> nbr_mask_;
    std::vector<char> solo_ok_;
};

} // namespace detail

/// Robust: some f in ins(C) such that for every e in E(C) the graph
/// G - {x1,x2,x3} - e - f has a component with a neighbour of each x_i.
inline std::optional<RobustWitness> is_robust_cycle(const BoundaryContext& ctx, const std::vector<EdgeId>& c)
{
    detail::ContextIndex idx(ctx);
    const auto w = require_cycle(ctx.graph(), c);
    const auto ins_c = idx.ins(c);
    if (!idx.eligible(w, ins_c))
        return std::nullopt;
    if (auto f = idx.robust_f(w, ins_c))
        return RobustWitness{c, *f};
    return std::nullopt;
}

/// Flexible: |Z| <= 3 and two vertices of Z - X have exactly one edge outside
/// E(C) and ins(C). Same preamble as robust.
inline std::optional<FlexibleWitness> flexible_analysis(const BoundaryContext& ctx, const std::vector<EdgeId>& c)
{
    detail::ContextIndex idx(ctx);
    const auto w = require_cycle(ctx.graph(), c);
    const auto ins_c = idx.ins(c);
    if (!idx.eligible(w, ins_c))
        return std::nullopt;
    if (auto z = idx.flexible_z(w, ins_c))
        return FlexibleWitness{c, *z};
    return std::nullopt;
}

/// Exhaustive scan for a robust cycle; nullopt if the cycle budget runs out.
inline std::optional<bool> has_robust_cycle(const BoundaryContext& ctx, std::size_t max_cycles = 2'000'000)
{
    detail::ContextIndex idx(ctx);
    bool found = false;
    try {
        enumerate_cycles(
            ctx.graph(),
            [&](const std::vector<EdgeId>& c) {
                if (!idx.may_be_robust(c))
                    return true;
                const auto w = require_cycle(ctx.graph(), c);
                const auto ins_c = idx.ins(c);
                found = idx.eligible(w, ins_c) && idx.robust_f(w, ins_c).has_value();
                return !found;
            },
            max_cycles);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
    return found;
}

inline std::optional<CycleWitness> classify_cycle(const BoundaryContext& ctx, const std::vector<EdgeId>& c)
{
    return detail::ContextIndex(ctx).classify(c);
}

struct CycleSearchOptions {
    std::size_t max_cycles = 2'000'000; // exhaustive fallback
    std::size_t window_cycles = 200'000;
    std::size_t maximal_cycles = 200'000; // exhaustive maximality check
};

namespace detail {

/// Vertex sets of G - X - (cut edges of G - X), plus the cut edges joining them.
struct ChainPieces {
    std::vector<std::vector<VertexId>> pieces;
    std::vector<std::pair<int, int>> links;
};

inline ChainPieces chain_pieces(const BoundaryContext& ctx)
{
    const auto rest = delete_vertices(ctx.graph(), std::vector<VertexId>(ctx.x.begin(), ctx.x.end()));
    const auto cuts = cut_edges(rest);
    Multigraph cut_free = rest;
    for (EdgeId e : cuts)
        cut_free.remove_edge(e);
    ChainPieces out;
    out.pieces = components(cut_free);
    std::map<VertexId, int> where;
    for (int i = 0; i < static_cast<int>(out.pieces.size()); ++i)
        for (VertexId v : out.pieces[i])
            where[v] = i;
    for (EdgeId e : cuts) {
        const Edge& x = rest.edge(e);
        out.links.emplace_back(std::min(where[x.u], where[x.v]), std::max(where[x.u], where[x.v]));
    }
    std::sort(out.links.begin(), out.links.end());
    return out;
}

} // namespace detail

/// Searches, in order: cycles of G - X; cycles inside one or two consecutive
/// pieces of the chain structure of G - X together with the boundary
/// vertices; every cycle of G. Returns the first verified witness.
inline std::optional<CycleWitness> find_robust_or_flexible(const BoundaryContext& ctx,
                                                          const CycleSearchOptions& opt = {})
{
    detail::ContextIndex idx(ctx);
    const Multigraph& g = ctx.graph();
    std::optional<CycleWitness> found;
    auto visit = [&](const std::vector<EdgeId>& c) {
        found = idx.classify(c);
        return !found.has_value();
    };
    const auto inner = delete_vertices(g, std::vector<VertexId>(ctx.x.begin(), ctx.x.end()));
    try {
        enumerate_cycles(inner, visit, opt.window_cycles);
    } catch (const BudgetExceeded&) {
    }
    if (found)
        return found;
    const auto pieces = detail::chain_pieces(ctx);
    auto window = [&](std::vector<VertexId> vs) {
        vs.insert(vs.end(), ctx.x.begin(), ctx.x.end());
        std::sort(vs.begin(), vs.end());
        try {
            enumerate_cycles(restrict_to(g, vs), visit, opt.window_cycles);
        } catch (const BudgetExceeded&) {
        }
    };
    for (const auto& p : pieces.pieces) {
        window(p);
        if (found)
            return found;
    }
    for (auto [a, b] : pieces.links) {
        auto vs = pieces.pieces[a];
        vs.insert(vs.end(), pieces.pieces[b].begin(), pieces.pieces[b].end());
        window(vs);
        if (found)
            return found;
    }
    enumerate_cycles(g, visit, opt.max_cycles);
    return found;
}

/// C-bridges B violating: E(B) inside ins(C), or some x_i in V(B) - V(C).
inline std::vector<EtaBridge> misplaced_bridges(const BoundaryContext& ctx, const CycleWitness& w)
{
    std::vector<EtaBridge> out;
    const std::set<EdgeId> ins(w.ins.begin(), w.ins.end());
    for (auto& b : c_bridges(ctx.graph(), w.cycle)) {
        const bool inside = std::all_of(b.edges.begin(), b.edges.end(), [&](EdgeId e) { return ins.count(e); });
        const bool holds_x = std::any_of(b.interior.begin(), b.interior.end(),
                                         [&](VertexId v) { return ctx.is_boundary(v); });
        if (!inside && !holds_x)
            out.push_back(std::move(b));
    }
    return out;
}

namespace detail {

inline bool ins_subset(const CycleWitness& a, const CycleWitness& b)
{
    return std::includes(b.ins.begin(), b.ins.end(), a.ins.begin(), a.ins.end());
}

/// Deterministic preference among witnesses: larger ins, then smaller edge list.
inline bool better(const CycleWitness& a, const CycleWitness& b)
{
    if (a.ins.size() != b.ins.size())
        return a.ins.size() > b.ins.size();
    return a.cycle < b.cycle;
}

/// Tries to replace C by a cycle of C ∪ P with strictly larger interior,
/// where P runs through a misplaced bridge avoiding X.
inline std::optional<CycleWitness> enlarge(const ContextIndex& idx, const CycleWitness& w)
{
    const auto& ctx = idx.ctx();
    const Multigraph& g = ctx.graph();
    const auto walk = require_cycle(g, w.cycle);
    std::map<VertexId, std::size_t> pos;
    for (std::size_t k = 0; k < walk.vertices.size(); ++k)
        pos[walk.vertices[k]] = k;
    std::optional<CycleWitness> best;
    for (const auto& b : misplaced_bridges(ctx, w)) {
        std::set<EdgeId> be(b.edges.begin(), b.edges.end());
        std::set<VertexId> interior(b.interior.begin(), b.interior.end());
        for (std::size_t i = 0; i < b.attachments.size(); ++i)
            for (std::size_t j = i + 1; j < b.attachments.size(); ++j) {
                const VertexId s = b.attachments[i], t = b.attachments[j];
                // shortest s-t path through the bridge avoiding X
                std::map<VertexId, EdgeId> via;
                std::deque<VertexId> q{s};
                via[s] = -1;
                while (!q.empty() && !via.count(t)) {
                    const VertexId v = q.front();
                    q.pop_front();
                    if (v != s && !interior.count(v))
                        continue;
                    for (EdgeId e : g.incident_edges(v)) {
                        if (!be.count(e))
                            continue;
                        const VertexId u = g.edge(e).other(v);
                        if (via.count(u) || ctx.is_boundary(u) || (u != t && !interior.count(u)))
                            continue;
                        via[u] = e;
                        q.push_back(u);
                    }
                }
                if (!via.count(t))
                    continue;
                std::vector<EdgeId> path;
                for (VertexId v = t; v != s;) {
                    const EdgeId e = via[v];
                    path.push_back(e);
                    v = g.edge(e).other(v);
                }
                // the two cycles of C ∪ P
                const std::size_t n = walk.vertices.size();
                std::size_t a = pos[s], c = pos[t];
                for (int side = 0; side < 2; ++side) {
                    std::vector<EdgeId> cyc = path;
                    for (std::size_t k = a; k != c; k = (k + 1) % n)
                        cyc.push_back(walk.edges[k]);
                    std::swap(a, c);
                    if (auto cw = idx.classify(cyc))
                        if (ins_subset(w, *cw) && cw->ins != w.ins && (!best || better(*cw, *best)))
                            best = cw;
                }
            }
    }
    return best;
}

} // namespace detail

/// A robust or flexible cycle whose ins(C) is maximal under inclusion among
/// the witnesses found, then pushed outwards through misplaced bridges until
/// no strict enlargement verifies.
inline CycleWitness maximal_robust_or_flexible(const BoundaryContext& ctx, const CycleSearchOptions& opt = {})
{
    detail::ContextIndex idx(ctx);
    std::vector<CycleWitness> found;
    bool complete = true;
    try {
        enumerate_cycles(
            ctx.graph(),
            [&](const std::vector<EdgeId>& c) {
                if (auto w = idx.classify(c))
                    found.push_back(std::move(*w));
                return true;
            },
            opt.maximal_cycles, 50 * opt.maximal_cycles);
    } catch (const BudgetExceeded&) {
        complete = false;
    }
    if (!complete && found.empty())
        if (auto first = find_robust_or_flexible(ctx, opt))
            found.push_back(std::move(*first));
    if (found.empty())
        throw PreconditionError("no robust or flexible cycle exists");
    std::optional<CycleWitness> best;
    for (const auto& w : found) {
        const bool dominated = std::any_of(found.begin(), found.end(), [&](const CycleWitness& o) {
            return o.ins != w.ins && detail::ins_subset(w, o);
        });
        if (!dominated && (!best || detail::better(w, *best)))
            best = w;
    }
    // only needed when the scan was cut short
    while (auto bigger = detail::enlarge(idx, *best))
        best = std::move(bigger);
    best->exhaustive = complete;
    return *best;
}

// ---------------------------------------------------------------------------
// Triads and tripods

struct Triad {
    VertexId center = -1;
    std::array<std::vector<EdgeId>, 3> legs; // from the center to v_i
};

/// Paths P_i from u_i to v_i (empty when u_i == v_i) and two triads with feet v.
struct Tripod {
    std::array<VertexId, 3> u{};
    std::array<VertexId, 3> v{};
    std::array<std::vector<EdgeId>, 3> paths;
    std::array<Triad, 2> triads;
};

inline std::optional<std::string> tripod_violation(const Multigraph& g, const Tripod& t)
{
    std::set<VertexId> feet(t.v.begin(), t.v.end());
    if (feet.size() != 3 || std::set<VertexId>(t.u.begin(), t.u.end()).size() != 3)
        return "feet are not distinct";
    std::set<EdgeId> used_edges;
    auto take = [&](VertexId from, const std::vector<EdgeId>& p, VertexId to,
                    std::vector<VertexId>& verts) -> std::optional<std::string> {
        auto w = walk_vertices(g, from, p);
        if (!w || w->back() != to)
            return "a path does not join its ends";
        std::set<VertexId> s(w->begin(), w->end());
        if (s.size() != w->size())
            return "a path repeats a vertex";
        for (EdgeId e : p)
            if (!used_edges.insert(e).second)
                return "an edge is used twice";
        verts.insert(verts.end(), w->begin(), w->end());
        return std::nullopt;
    };
    std::array<std::vector<VertexId>, 3> parts; // P-union, T1, T2
    for (int i = 0; i < 3; ++i) {
        std::vector<VertexId> vs;
        if (auto bad = take(t.u[i], t.paths[i], t.v[i], vs))
            return bad;
        for (VertexId x : vs)
            if (std::count(parts[0].begin(), parts[0].end(), x))
                return "paths P_i are not disjoint";
        parts[0].insert(parts[0].end(), vs.begin(), vs.end());
    }
    for (int j = 0; j < 2; ++j) {
        const Triad& tr = t.triads[j];
        if (feet.count(tr.center))
            return "triad centre is a foot";
        std::map<VertexId, int> seen;
        for (int i = 0; i < 3; ++i) {
            std::vector<VertexId> vs;
            if (auto bad = take(tr.center, tr.legs[i], t.v[i], vs))
                return bad;
            if (tr.legs[i].empty())
                return "triad leg is empty";
            for (VertexId x : vs)
                ++seen[x];
        }
        for (const auto& [x, k] : seen)
            if (k > 1 && x != tr.center)
                return "triad legs meet outside the centre";
        for (const auto& [x, k] : seen)
            parts[1 + j].push_back(x);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (VertexId x : parts[a])
                if (!feet.count(x) && std::count(parts[b].begin(), parts[b].end(), x))
                    return "tripod parts meet outside the feet";
    return std::nullopt;
}

inline bool verify_tripod(const Multigraph& g, const Tripod& t) { return !tripod_violation(g, t).has_value(); }

/// Exhaustive tripod search: for each choice of which P_i are trivial, look for
/// a subdivision of the corresponding pattern with u_i pinned.
inline std::optional<Tripod> search_tripod(const Multigraph& g, std::array<VertexId, 3> u,
                                           std::size_t budget = 20'000'000)
{
    for (int trivial = 7; trivial >= 0; --trivial) {
        Multigraph pat = Multigraph::with_vertices(3);
        std::array<VertexId, 3> foot{};
        std::array<EdgeId, 3> pe{-1, -1, -1};
        for (int i = 0; i < 3; ++i) {
            if (trivial >> i & 1) {
                foot[i] = i;
            } else {
                foot[i] = pat.add_vertex();
                pe[i] = pat.add_edge(i, foot[i]);
            }
        }
        std::array<VertexId, 2> centre{pat.add_vertex(), pat.add_vertex()};
        std::array<std::array<EdgeId, 3>, 2> leg{};
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 3; ++i)
                leg[j][i] = pat.add_edge(centre[j], foot[i]);
        SubdivisionOptions opt;
        opt.budget = budget;
        opt.pins = {{0, u[0]}, {1, u[1]}, {2, u[2]}};
        auto eta = find_subdivision(pat, g, opt);
        if (!eta)
            continue;
        Tripod t;
        t.u = u;
        auto oriented = [&](EdgeId e, VertexId from) {
            auto p = eta->edge_map.at(e);
            const VertexId start = eta->vertex_map.at(from);
            if (!walk_vertices(g, start, p))
                std::reverse(p.begin(), p.end());
            return p;
        };
        for (int i = 0; i < 3; ++i) {
            t.v[i] = eta->vertex_map.at(foot[i]);
            if (pe[i] >= 0)
                t.paths[i] = oriented(pe[i], i);
        }
        for (int j = 0; j < 2; ++j) {
            t.triads[j].center = eta->vertex_map.at(centre[j]);
            for (int i = 0; i < 3; ++i)
                t.triads[j].legs[i] = oriented(leg[j][i], centre[j]);
        }
        return t;
    }
    return std::nullopt;
}

/// Thrown if neither a disk embedding nor a tripod exists, which the
/// precondition rules out.
class DichotomyViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Either a plane embedding with u1, u2, u3 on one face, or a tripod with feet
/// u1, u2, u3. Requires that no separation of order <= 2 cuts anything off the feet.
inline std::variant<Tripod, PlaneGraph> find_tripod(const Multigraph& g, VertexId u1, VertexId u2, VertexId u3,
                                                    std::size_t budget = 20'000'000)
{
    for (VertexId v : {u1, u2, u3})
        g.require_vertex(v);
    if (u1 == u2 || u2 == u3 || u1 == u3)
        throw GraphError("tripod feet must be distinct");
    if (!internally_3_connected(g, u1, u2, u3))
        throw PreconditionError("a separation of order at most two cuts vertices off the feet");
    if (auto pg = disk_embeddable(g, {u1, u2, u3}))
        return *pg;
    if (auto t = search_tripod(g, {u1, u2, u3}, budget))
        return *t;
    throw DichotomyViolation("no disk embedding and no tripod");
}

} // namespace xminor
