#pragma once

#include "errors.hpp"
#include "multigraph.hpp"
#include "planarity.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace xminor {

/// Realizes one crossing: e = uv and f = xy are replaced by a new vertex w
/// with edges uw, wv, xw, wy (new ids, in that order).
inline Multigraph planarize_pair(const Multigraph& g, EdgeId e, EdgeId f)
{
    if (e == f)
        throw GraphError("planarize_pair needs two distinct edges");
    const Edge a = g.edge(e), b = g.edge(f);
    if (a.is_loop() || b.is_loop())
        throw GraphError("loops cannot be planarized");
    if (a.has_end(b.u) || a.has_end(b.v))
        throw GraphError("edges " + std::to_string(e) + " and " + std::to_string(f) + " share an endpoint");
    Multigraph out = g;
    out.remove_edge(e);
    out.remove_edge(f);
    const VertexId w = out.add_vertex();
    out.add_edge(a.u, w);
    out.add_edge(w, a.v);
    out.add_edge(b.u, w);
    out.add_edge(w, b.v);
    return out;
}

/// Pairs are given in the graphs obtained by replaying the earlier pairs.
struct CrossingCertificate {
    int level = 0;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    PlaneGraph final_embedding;
};

/// Sum over components of max(0, m - 3n + 6) on the simple underlying graph.
inline int crossing_lower_bound(const Multigraph& g)
{
    int bound = 0;
    for (const auto& comp : components(g)) {
        const int n = static_cast<int>(comp.size());
        if (n < 5)
            continue;
        std::set<std::pair<VertexId, VertexId>> simple;
        for (const Edge& e : g.edges())
            if (!e.is_loop() && std::binary_search(comp.begin(), comp.end(), e.u))
                simple.insert(std::minmax(e.u, e.v));
        bound += std::max(0, static_cast<int>(simple.size()) - 3 * n + 6);
    }
    return bound;
}

struct CrossingOptions {
    std::size_t budget = 5'000'000; // planarity tests
};

namespace detail {

class CrossingSearch {
public:
    CrossingSearch(const Multigraph& g, const CrossingOptions& opt) : g_(g), budget_(opt.budget, "crossing search")
    {
    }

    std::optional<CrossingCertificate> run(int c)
    {
        std::map<EdgeId, EdgeId> origin;
        for (const Edge& e : g_.edges())
            origin[e.id] = e.id;
        std::vector<std::pair<EdgeId, EdgeId>> pairs;
        if (!search(g_, origin, c, {-1, -1}, pairs))
            return std::nullopt;
        CrossingCertificate cert;
        cert.level = c;
        cert.pairs = pairs;
        Multigraph cur = g_;
        for (auto [e, f] : pairs)
            cur = planarize_pair(cur, e, f);
        cert.final_embedding = *planar_embedding(cur);
        return cert;
    }

private:
    const Multigraph& g_;
    Budget budget_;

    // Crossings are added in increasing order of the pair of original edges
    // they involve; in a good drawing two edges cross at most once, so every
    // drawing with k crossings is reached exactly once per choice of halves.
    bool search(const Multigraph& cur, const std::map<EdgeId, EdgeId>& origin, int left,
                std::pair<EdgeId, EdgeId> last, std::vector<std::pair<EdgeId, EdgeId>>& pairs)
    {
        budget_.tick();
        if (is_planar(cur))
            return true;
        if (left == 0 || crossing_lower_bound(cur) > left)
            return false;
        const auto edges = cur.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = 0; j < edges.size(); ++j) {
                const Edge& a = edges[i];
                const Edge& b = edges[j];
                const EdgeId oa = origin.at(a.id), ob = origin.at(b.id);
                if (oa >= ob || std::pair{oa, ob} <= last)
                    continue;
                const Edge& ga = g_.edge(oa);
                const Edge& gb = g_.edge(ob);
                if (ga.is_loop() || gb.is_loop() || ga.has_end(gb.u) || ga.has_end(gb.v))
                    continue;
                if (a.has_end(b.u) || a.has_end(b.v))
                    continue;
                const EdgeId first_new = cur.next_edge_id();
                Multigraph next = planarize_pair(cur, a.id, b.id);
                auto next_origin = origin;
                next_origin.erase(a.id);
                next_origin.erase(b.id);
                next_origin[first_new] = next_origin[first_new + 1] = oa;
                next_origin[first_new + 2] = next_origin[first_new + 3] = ob;
                pairs.emplace_back(a.id, b.id);
                if (search(next, next_origin, left - 1, {oa, ob}, pairs))
                    return true;
                pairs.pop_back();
            }
        }
        return false;
    }
};

} // namespace detail

/// A certificate that G has a drawing with at most c crossings, or nullopt.
/// Exact: every good drawing is realized by some sequence of planarized pairs.
inline std::optional<CrossingCertificate> crossing_le(const Multigraph& g, int c, const CrossingOptions& opt = {})
{
    if (c < 0 || c > 3)
        throw GraphError("crossing_le supports 0 <= c <= 3");
    detail::CrossingSearch s(g, opt);
    return s.run(c);
}

/// Replays the certificate on G and reports why it fails, or nullopt if it
/// yields a planar graph matching the stated embedding.
inline std::optional<std::string> certificate_violation(const Multigraph& g, const CrossingCertificate& cert)
{
    if (static_cast<int>(cert.pairs.size()) > cert.level)
        return "more pairs than the certificate level";
    Multigraph cur = g;
    for (auto [e, f] : cert.pairs) {
        try {
            cur = planarize_pair(cur, e, f);
        } catch (const GraphError& err) {
            return std::string("pair cannot be planarized: ") + err.what();
        }
    }
    if (!is_planar(cur))
        return "replayed graph is not planar";
    if (!(cert.final_embedding.graph == cur))
        return "embedding is not of the replayed graph";
    if (!is_valid_embedding(cert.final_embedding))
        return "embedding is not a plane rotation system";
    return std::nullopt;
}

inline bool replay_certificate(const Multigraph& g, const CrossingCertificate& cert)
{
    return !certificate_violation(g, cert).has_value();
}

/// Result of checking the four conditions; the first failing one is reported.
struct XMinimalityReport {
    bool verdict = false;
    std::optional<std::string> failed_condition; // "i", "ii", "iii" or "iv"
    std::optional<EdgeId> witness_edge;
    std::optional<VertexId> witness_vertex;
    std::optional<CrossingCertificate> certificate; // a 1-crossing drawing when (i) fails
};

/// (i) no drawing with one crossing; (ii) every edge deletion leaves one;
/// (iii) no vertex of degree two; (iv) no degree-four vertex whose edges form
/// two parallel pairs.
inline XMinimalityReport is_x_minimal(const Multigraph& g, const CrossingOptions& opt = {})
{
    XMinimalityReport r;
    if (auto cert = crossing_le(g, 1, opt)) {
        r.failed_condition = "i";
        r.certificate = std::move(cert);
        return r;
    }
    for (const Edge& e : g.edges())
        if (!crossing_le(delete_edge(g, e.id), 1, opt)) {
            r.failed_condition = "ii";
            r.witness_edge = e.id;
            return r;
        }
    for (VertexId v : g.vertices())
        if (g.degree(v) == 2) {
            r.failed_condition = "iii";
            r.witness_vertex = v;
            return r;
        }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 4)
            continue;
        std::map<VertexId, int> classes;
        bool loop = false;
        for (EdgeId e : g.incident_edges(v)) {
            const Edge& x = g.edge(e);
            loop = loop || x.is_loop();
            ++classes[x.other(v)];
        }
        if (!loop && classes.size() == 2 && classes.begin()->second == 2) {
            r.failed_condition = "iv";
            r.witness_vertex = v;
            return r;
        }
    }
    r.verdict = true;
    return r;
}

} // namespace xminor
