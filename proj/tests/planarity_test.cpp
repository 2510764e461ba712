#include <xminor/families.hpp>
#include <xminor/planarity.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace xminor;

namespace {

std::vector<EdgeId> edges_between(const Multigraph& g, const std::vector<VertexId>& cyc)
{
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        for (const Edge& e : g.edges())
            if (std::minmax(e.u, e.v) == std::minmax(a, b)) {
                out.push_back(e.id);
                break;
            }
    }
    return out;
}

} // namespace

TEST(Planarity, Kuratowski)
{
    EXPECT_FALSE(is_planar(complete_graph(5)));
    EXPECT_TRUE(is_planar(complete_graph(4)));
    EXPECT_FALSE(is_planar(complete_bipartite(3, 3).graph));
    EXPECT_FALSE(planar_embedding(complete_graph(5)).has_value());
}

TEST(Planarity, GadgetMinusLinkIsPlanar)
{
    const auto g = a4_gadget();
    EXPECT_FALSE(is_planar(g.graph));
    EXPECT_TRUE(is_planar(delete_edge(g.graph, g.edge("link"))));
}

TEST(Planarity, ParallelPairFormsTwoFace)
{
    Multigraph g = Multigraph::with_vertices(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    const auto pg = planar_embedding(g);
    ASSERT_TRUE(pg);
    EXPECT_TRUE(is_valid_embedding(*pg));
    const auto fs = faces(*pg);
    ASSERT_EQ(fs.size(), 3u);
    for (const auto& f : fs)
        EXPECT_EQ(f.size(), 2u);
}

TEST(Planarity, LoopBoundsOneFace)
{
    Multigraph g = Multigraph::with_vertices(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(0, 0);
    const auto pg = planar_embedding(g);
    ASSERT_TRUE(pg);
    EXPECT_TRUE(is_valid_embedding(*pg));
    EXPECT_EQ(faces(*pg).size(), 3u);
}

TEST(Planarity, K4HasFourTriangles)
{
    const auto pg = planar_embedding(complete_graph(4));
    ASSERT_TRUE(pg);
    const auto fs = faces(*pg);
    ASSERT_EQ(fs.size(), 4u);
    for (const auto& f : fs)
        EXPECT_EQ(f.size(), 3u);
}

TEST(Planarity, WheelFaces)
{
    const auto w = wheel(4);
    const auto pg = planar_embedding(w.graph);
    ASSERT_TRUE(pg);
    const auto rim = edges_between(w.graph, {1, 2, 3, 4});
    EXPECT_TRUE(is_facial(*pg, rim));
    for (int i = 1; i <= 4; ++i)
        EXPECT_TRUE(is_facial(*pg, edges_between(w.graph, {0, i, i % 4 + 1})));
    EXPECT_FALSE(is_facial(*pg, edges_between(w.graph, {0, 1, 2, 3})));
    EXPECT_THROW(is_facial(*pg, {0, 1}), GraphError);
}

TEST(Planarity, InteriorOfWheelRimIsSpokes)
{
    const auto w = wheel(4);
    auto pg = planar_embedding(w.graph);
    ASSERT_TRUE(pg);
    const auto rim = edges_between(w.graph, {1, 2, 3, 4});
    ASSERT_TRUE(set_outer_face(*pg, rim));
    const auto ins = interior_edges(*pg, rim);
    EXPECT_EQ(ins.inside_edges, (std::vector<EdgeId>{4, 5, 6, 7}));
    EXPECT_EQ(ins.inside_vertices, std::vector<VertexId>{0});
    const auto tri = edges_between(w.graph, {0, 1, 2});
    EXPECT_TRUE(interior_edges(*pg, tri).inside_edges.empty());
}

TEST(Planarity, InteriorOfCircularLadderRail)
{
    const auto o = circular_ladder(4);
    auto pg = planar_embedding(o.graph);
    ASSERT_TRUE(pg);
    const auto outer_rail = edges_between(o.graph, {0, 1, 2, 3});
    ASSERT_TRUE(set_outer_face(*pg, outer_rail));
    const auto ins = interior_edges(*pg, outer_rail);
    EXPECT_EQ(ins.inside_edges.size(), 8u);
    for (EdgeId e : ins.inside_edges) {
        const Edge& x = o.graph.edge(e);
        EXPECT_TRUE(x.u >= 4 || x.v >= 4);
    }
    EXPECT_EQ(ins.inside_vertices, (std::vector<VertexId>{4, 5, 6, 7}));
}

TEST(Planarity, Peripheral)
{
    const auto k4 = complete_graph(4);
    EXPECT_TRUE(is_peripheral(k4, edges_between(k4, {0, 1, 2})));
    EXPECT_FALSE(is_peripheral(k4, edges_between(k4, {0, 1, 2, 3})));
    const auto o = circular_ladder(4);
    EXPECT_TRUE(is_peripheral(o.graph, edges_between(o.graph, {0, 1, 2, 3})));
    EXPECT_FALSE(is_peripheral(o.graph, edges_between(o.graph, {0, 1, 2, 6, 5, 4})));
}

TEST(DiskEmbedding, Examples)
{
    const auto tri = cycle_graph(3);
    EXPECT_TRUE(disk_embeddable(tri, {0, 1, 2}));
    EXPECT_FALSE(disk_embeddable(complete_bipartite(3, 3).graph, {0, 1, 2}));
    const auto k4 = complete_graph(4);
    EXPECT_TRUE(disk_embeddable(k4, {0, 1, 2}));
    EXPECT_TRUE(disk_embeddable(k4, {1, 2, 3}));
    EXPECT_THROW(disk_embeddable(k4, {0, 9}), GraphError);
    EXPECT_THROW(disk_embeddable(k4, {0, 0}), GraphError);
}

TEST(DiskEmbedding, BoundaryOnOuterFace)
{
    const auto k4 = complete_graph(4);
    for (VertexId skip = 0; skip < 4; ++skip) {
        std::vector<VertexId> b;
        for (VertexId v = 0; v < 4; ++v)
            if (v != skip)
                b.push_back(v);
        const auto pg = disk_embeddable(k4, b);
        ASSERT_TRUE(pg);
        ASSERT_TRUE(is_valid_embedding(*pg));
        const auto on = outer_face_vertices(*pg);
        for (VertexId v : b)
            EXPECT_TRUE(std::binary_search(on.begin(), on.end(), v));
    }
}

// Planarity and disk embeddability agree with exhaustive rotation search.
TEST(PlanarityProperty, MatchesRotationOracle)
{
    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + trial % 6;
        const int m = n + static_cast<int>(rng() % (n + 4));
        const auto g = oracle::random_graph(rng, n, m, trial % 3 == 0);
        std::vector<VertexId> boundary;
        for (VertexId v = 0; v < n && boundary.size() < static_cast<std::size_t>(trial % 4); ++v)
            if (rng() % 2)
                boundary.push_back(v);
        const auto want = oracle::disk_embeddable(g, boundary);
        if (!want.decided)
            continue;
        ++checked;
        const auto got = disk_embeddable(g, boundary);
        ASSERT_EQ(got.has_value(), want.yes) << "trial " << trial;
        if (boundary.empty()) {
            ASSERT_EQ(is_planar(g), want.yes);
        }
        if (got) {
            ASSERT_TRUE(is_valid_embedding(*got)) << "trial " << trial;
            if (!boundary.empty() && is_connected(g)) {
                const auto on = outer_face_vertices(*got);
                for (VertexId v : boundary)
                    ASSERT_TRUE(std::binary_search(on.begin(), on.end(), v)) << "trial " << trial;
            }
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(PlanarityProperty, EmbeddingsSatisfyEuler)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 14;
        const auto g = oracle::random_graph(rng, n, static_cast<int>(rng() % (2 * n + 2)), true);
        const auto pg = planar_embedding(g);
        if (!pg)
            continue;
        ASSERT_TRUE(is_valid_embedding(*pg)) << "trial " << trial;
    }
}

// Each C-bridge lies entirely on one side of C; inner facial cycles enclose
// nothing and the outer facial cycle encloses everything else.
TEST(PlanarityProperty, InteriorRespectsBridgesAndFaces)
{
    std::mt19937 rng(4);
    int cycles_checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + trial % 6;
        const auto g = oracle::random_graph(rng, n, 2 * n - 1, trial % 5 == 0);
        if (!is_connected(g))
            continue;
        const auto pg = planar_embedding(g);
        if (!pg)
            continue;
        FaceSet fs(*pg);
        const auto outer_edges = fs.face_edges(fs.face_of(*pg->outer));
        for (const auto& c : all_cycles(g)) {
            ++cycles_checked;
            const auto ins = interior_edges(*pg, c);
            std::set<EdgeId> inside(ins.inside_edges.begin(), ins.inside_edges.end());
            std::set<EdgeId> on_c(c.begin(), c.end());
            for (EdgeId e : c)
                ASSERT_FALSE(inside.count(e));
            const auto walk = require_cycle(g, c);
            std::set<VertexId> cv(walk.vertices.begin(), walk.vertices.end());
            // bridges: components of G - V(C) with their attachment edges, plus chords
            const auto rest = delete_vertices(g, std::vector<VertexId>(cv.begin(), cv.end()));
            for (const auto& comp : components(rest)) {
                std::set<VertexId> in_comp(comp.begin(), comp.end());
                int sides = 0, total = 0;
                for (const Edge& e : g.edges())
                    if (in_comp.count(e.u) || in_comp.count(e.v)) {
                        ++total;
                        sides += inside.count(e.id) ? 1 : 0;
                    }
                ASSERT_TRUE(sides == 0 || sides == total) << "trial " << trial;
            }
            if (is_facial(*pg, c)) {
                if (outer_edges == std::vector<EdgeId>(on_c.begin(), on_c.end()))
                    ASSERT_EQ(inside.size() + c.size(), g.num_edges());
                else
                    ASSERT_TRUE(inside.empty());
            }
        }
    }
    EXPECT_GT(cycles_checked, 500);
}
