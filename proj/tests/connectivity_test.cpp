#include <xminor/connectivity.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <numeric>

using namespace xminor;

namespace {

Multigraph two_triangles_sharing_vertex()
{
    Multigraph g = Multigraph::with_vertices(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    return g;
}

Multigraph mobius4()
{
    // rails u0..u3, v0..v3 as 0..3 and 4..7
    Multigraph g = Multigraph::with_vertices(8);
    for (int i = 0; i < 4; ++i)
        g.add_edge(i, i + 4);
    for (int i = 0; i + 1 < 4; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(i + 4, i + 5);
    }
    g.add_edge(4, 3);
    g.add_edge(0, 7);
    return g;
}

} // namespace

TEST(Separations, CompleteGraphHasNone) { EXPECT_TRUE(enumerate_separations(complete_graph(4), 3).empty()); }

TEST(Separations, PathHasOneCut)
{
    const auto s = enumerate_separations(path_graph(3), 1);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].side_a, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(s[0].side_b, (std::vector<VertexId>{1, 2}));
    EXPECT_EQ(s[0].order(), 1u);
}

TEST(Separations, TwoTrianglesSharingVertex)
{
    const auto s = enumerate_separations(two_triangles_sharing_vertex(), 1);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].separator(), std::vector<VertexId>{0});
}

TEST(Separations, OrderAboveGuardRejected)
{
    EXPECT_THROW(enumerate_separations(complete_graph(6), 4), GraphError);
    SeparationOptions opt;
    opt.max_allowed_order = 4;
    EXPECT_NO_THROW(enumerate_separations(complete_graph(6), 4, opt));
}

TEST(SeparationsProperty, MatchesSideAssignmentOracle)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + trial % 8;
        const auto g = oracle::random_graph(rng, n, n - 1 + static_cast<int>(rng() % (n + 3)), trial % 3 == 0);
        for (int k = 0; k <= 3; ++k) {
            const auto got = enumerate_separations(g, k);
            std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> mine;
            for (const auto& s : got) {
                ASSERT_TRUE(is_separation(g, s));
                ASSERT_TRUE(s.nontrivial());
                ASSERT_LE(s.order(), static_cast<std::size_t>(k));
                ASSERT_LE(s.side_a, s.side_b);
                mine.insert({s.side_a, s.side_b});
            }
            ASSERT_EQ(mine.size(), got.size());
            ASSERT_EQ(mine, oracle::separations(g, k)) << "trial " << trial << " k " << k;
        }
    }
}

TEST(Connectivity, Examples)
{
    EXPECT_TRUE(is_k_connected(complete_graph(5), 4));
    EXPECT_THROW(is_k_connected(complete_graph(5), 5), GraphError);
    EXPECT_TRUE(is_k_connected(mobius4(), 3));
    EXPECT_FALSE(is_k_connected(mobius4(), 4));
    EXPECT_FALSE(is_k_connected(path_graph(4), 2));
    EXPECT_TRUE(is_k_connected(cycle_graph(5), 2));
}

TEST(Connectivity, ParallelEdgesAddNothing)
{
    Multigraph g = Multigraph::with_vertices(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    EXPECT_TRUE(is_k_connected(g, 1));
    EXPECT_FALSE(is_k_connected(g, 2));
}

TEST(ConnectivityProperty, MatchesSubsetRemovalOracle)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 11;
        const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
        const auto g = oracle::random_graph(rng, n, m, trial % 4 == 0);
        for (int k = 0; k <= 4; ++k)
            ASSERT_EQ(is_k_connected(g, k), oracle::k_connected(g, k)) << "trial " << trial << " k " << k;
    }
}

TEST(Blocks, TwoTrianglesSharingVertex)
{
    const auto bf = blocks(two_triangles_sharing_vertex());
    EXPECT_EQ(bf.blocks.size(), 2u);
    EXPECT_EQ(bf.cut_vertices, std::vector<VertexId>{0});
    EXPECT_TRUE(bf.block_graph_is_path());
    EXPECT_TRUE(bf.blocks[0].end_block && bf.blocks[1].end_block);
}

TEST(Blocks, TreeEdgesAreBlocks)
{
    Multigraph t = Multigraph::with_vertices(6);
    t.add_edge(0, 1);
    t.add_edge(0, 2);
    t.add_edge(0, 3);
    t.add_edge(3, 4);
    t.add_edge(3, 5);
    const auto bf = blocks(t);
    EXPECT_EQ(bf.blocks.size(), 5u);
    EXPECT_EQ(bf.cut_vertices, (std::vector<VertexId>{0, 3}));
    EXPECT_FALSE(bf.block_graph_is_path());
}

TEST(Blocks, CycleIsOneBlock)
{
    const auto bf = blocks(cycle_graph(6));
    EXPECT_EQ(bf.blocks.size(), 1u);
    EXPECT_TRUE(bf.cut_vertices.empty());
}

TEST(BlocksProperty, EdgePartitionAndAcyclicBlockGraph)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 10;
        const auto g = oracle::random_graph(rng, n, static_cast<int>(rng() % (2 * n + 1)), trial % 2 == 0);
        const auto bf = blocks(g);
        std::vector<int> seen;
        for (const auto& b : bf.blocks)
            for (EdgeId e : b.edges)
                seen.push_back(e);
        std::sort(seen.begin(), seen.end());
        std::vector<int> all;
        for (const Edge& e : g.edges())
            all.push_back(e.id);
        ASSERT_EQ(seen, all);
        // union-find over block nodes and cut-vertex nodes
        const int nb = static_cast<int>(bf.blocks.size());
        std::vector<int> p(nb + bf.cut_vertices.size());
        std::iota(p.begin(), p.end(), 0);
        std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
        for (auto [b, c] : bf.incidence) {
            const int ci = nb + static_cast<int>(std::lower_bound(bf.cut_vertices.begin(), bf.cut_vertices.end(), c) -
                                                 bf.cut_vertices.begin());
            ASSERT_NE(find(b), find(ci)) << "block graph has a cycle, trial " << trial;
            p[find(b)] = find(ci);
        }
        // every vertex of a non-loop block with >= 2 edges sees 2-connectivity
        for (const auto& b : bf.blocks) {
            if (b.vertices.size() >= 3) {
                ASSERT_TRUE(oracle::k_connected(restrict_to(g, b.vertices), 2));
            }
        }
        for (VertexId c : bf.cut_vertices)
            ASSERT_GE(std::count_if(bf.blocks.begin(), bf.blocks.end(),
                                    [c](const Block& b) { return std::binary_search(b.vertices.begin(), b.vertices.end(), c); }),
                      2);
    }
}
