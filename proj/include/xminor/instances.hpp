#pragma once

#include "errors.hpp"
#include "multigraph.hpp"
#include "structure.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace xminor {

// Seeded generators for disk instances with three boundary vertices. Each
// generator has a name and a version; bump the version whenever the output
// for a given (seed, size) changes.

struct BoundaryInstance {
    Multigraph graph;
    std::array<VertexId, 3> x{0, 1, 2};
    nlohmann::json descriptor; // generator, version, seed, parameters
};

namespace detail {

/// Portable draws: std distributions differ between standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    bool coin(int num, int den) { return below(den) < num; }

private:
    std::mt19937_64 rng_;
};

/// Random laminar family of chords v_a v_b (b >= a + 2) over positions [lo, hi].
inline void laminar_chords(Draw& d, int lo, int hi, int depth, std::vector<std::pair<int, int>>& out)
{
    if (hi - lo < 2 || depth == 0)
        return;
    int at = lo;
    while (at + 2 <= hi) {
        if (!d.coin(1, 3)) {
            ++at;
            continue;
        }
        const int len = 2 + d.below(std::min(hi - at - 1, 6));
        out.emplace_back(at, at + len);
        laminar_chords(d, at, at + len, depth - 1, out);
        at += len;
    }
}

} // namespace detail

inline constexpr const char* kPathFanGenerator = "path-fan";
inline constexpr int kPathFanVersion = 1;

/// Boundary triangle x1 x2 x3 (vertices 0, 1, 2) and a path v_1..v_n
/// (vertices 3..n+2) with x1 ~ v_1, x2 ~ v_n and x3 joined to most path
/// vertices. With `chords`, nested non-crossing chords are added on the side
/// of the path away from x3. Resampled until internally 3-connected.
inline BoundaryInstance path_fan_instance(int n, std::uint64_t seed, bool chords)
{
    if (n < 2)
        throw GraphError("path-fan needs at least two path vertices");
    detail::Draw d(seed);
    for (int attempt = 0;; ++attempt) {
        Multigraph g = Multigraph::with_vertices(3 + n);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(3 + i, 4 + i);
        g.add_edge(0, 3);
        g.add_edge(1, 2 + n);
        std::vector<std::pair<int, int>> ch;
        if (chords)
            detail::laminar_chords(d, 0, n - 1, 3, ch);
        for (auto [a, b] : ch)
            g.add_edge(3 + a, 3 + b);
        // after a few failed attempts fall back to the full fan
        const bool full = attempt >= 8;
        for (int i = 0; i < n; ++i)
            if (full || i == 0 || i == n - 1 || !d.coin(1, 4))
                g.add_edge(2, 3 + i);
        if (!internally_3_connected(g, 0, 1, 2) || !disk_embeddable(g, {0, 1, 2}))
            continue;
        BoundaryInstance out;
        out.graph = std::move(g);
        out.descriptor = {{"generator", kPathFanGenerator}, {"version", kPathFanVersion}, {"seed", seed},
                          {"n", n},  {"chords", chords},  {"attempt", attempt}};
        return out;
    }
}

inline constexpr const char* kChainGenerator = "chain";
inline constexpr int kChainVersion = 1;

/// Piece shapes of a chain. Middle pieces touch only x3; end pieces touch x1
/// (first) or x2 (last) as well.
enum class Piece { Vertex, Triangle, Square };

/// Pieces D_0..D_t of G - {x1,x2,x3} joined in a row by single cut edges.
/// Middle pieces: a vertex adjacent to x3; a triangle (b, c, a) with c ~ x3;
/// a 4-cycle (b, c1, c2, a) with c1, c2 ~ x3. End pieces: a vertex adjacent
/// to x3 and to x1 (or x2); or a triangle (a, p, q) with p ~ x3 and q ~ x1
/// (or x2). The triangle x1 x2 x3 bounds the outer face.
inline BoundaryInstance chain_instance(const std::vector<Piece>& pieces)
{
    if (pieces.size() < 2)
        throw GraphError("chain needs at least two pieces");
    if (pieces.front() == Piece::Square || pieces.back() == Piece::Square)
        throw GraphError("chain end pieces are vertices or triangles");
    Multigraph g = Multigraph::with_vertices(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    nlohmann::json shape = nlohmann::json::array();
    VertexId prev_a = -1; // exit vertex of the previous piece
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        const bool first = j == 0, last = j + 1 == pieces.size();
        const VertexId side = first ? 0 : 1; // x1 or x2 for end pieces
        VertexId b = -1, a = -1;
        switch (pieces[j]) {
        case Piece::Vertex: {
            b = a = g.add_vertex();
            g.add_edge(b, 2);
            if (first || last)
                g.add_edge(b, side);
            shape.push_back("vertex");
            break;
        }
        case Piece::Triangle: {
            if (first || last) {
                const VertexId joint = g.add_vertex(), p = g.add_vertex(), q = g.add_vertex();
                g.add_edge(joint, p);
                g.add_edge(p, q);
                g.add_edge(q, joint);
                g.add_edge(p, 2);
                g.add_edge(q, side);
                b = a = joint;
            } else {
                b = g.add_vertex();
                const VertexId c = g.add_vertex();
                a = g.add_vertex();
                g.add_edge(b, c);
                g.add_edge(c, a);
                g.add_edge(a, b);
                g.add_edge(c, 2);
            }
            shape.push_back("triangle");
            break;
        }
        case Piece::Square: {
            b = g.add_vertex();
            const VertexId c1 = g.add_vertex(), c2 = g.add_vertex();
            a = g.add_vertex();
            g.add_edge(b, c1);
            g.add_edge(c1, c2);
            g.add_edge(c2, a);
            g.add_edge(a, b);
            g.add_edge(c1, 2);
            g.add_edge(c2, 2);
            shape.push_back("square");
            break;
        }
        }
        if (prev_a >= 0)
            g.add_edge(prev_a, b);
        prev_a = a;
    }
    if (!internally_3_connected(g, 0, 1, 2))
        throw GraphError("chain instance is not internally 3-connected");
    BoundaryInstance out;
    out.graph = std::move(g);
    out.descriptor = {{"generator", kChainGenerator}, {"version", kChainVersion}, {"pieces", shape}};
    return out;
}

/// Random chain with at least `min_vertices` vertices.
inline BoundaryInstance random_chain_instance(int min_vertices, std::uint64_t seed, bool allow_squares = true)
{
    detail::Draw d(seed);
    std::vector<Piece> pieces{d.coin(1, 2) ? Piece::Vertex : Piece::Triangle};
    int n = 3 + (pieces[0] == Piece::Vertex ? 1 : 3);
    const Piece tail = d.coin(1, 2) ? Piece::Vertex : Piece::Triangle;
    const int tail_size = tail == Piece::Vertex ? 1 : 3;
    while (n + tail_size < min_vertices || pieces.size() < 2) {
        const int k = d.below(allow_squares ? 3 : 2);
        const Piece p = k == 0 ? Piece::Vertex : k == 1 ? Piece::Triangle : Piece::Square;
        pieces.push_back(p);
        n += p == Piece::Vertex ? 1 : p == Piece::Triangle ? 3 : 4;
    }
    pieces.push_back(tail);
    auto out = chain_instance(pieces);
    out.descriptor["seed"] = seed;
    out.descriptor["min_vertices"] = min_vertices;
    return out;
}

inline BoundaryContext context_of(const BoundaryInstance& inst) { return make_context(inst.graph, inst.x); }

} // namespace xminor
