#include <xminor/connectivity.hpp>
#include <xminor/families.hpp>
#include <xminor/planarity.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace xminor;

namespace {

std::vector<int> degree_sequence(const Multigraph& g)
{
    std::vector<int> d;
    for (VertexId v : g.vertices())
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// Brute-force isomorphism for tiny simple graphs.
bool isomorphic(const Multigraph& a, const Multigraph& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    oracle::Dense da(a), db(b);
    const int n = da.n;
    std::vector<std::vector<int>> ma(n, std::vector<int>(n)), mb = ma;
    for (auto [x, y] : da.ends)
        ++ma[x][y], ++ma[y][x];
    for (auto [x, y] : db.ends)
        ++mb[x][y], ++mb[y][x];
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = ma[i][j] == mb[p[i]][p[j]];
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace

TEST(Families, Wheel)
{
    EXPECT_TRUE(isomorphic(wheel(3).graph, complete_graph(4)));
    EXPECT_EQ(wheel(4).graph.num_vertices(), 5u);
    EXPECT_EQ(wheel(4).graph.num_edges(), 8u);
    const auto w6 = wheel(6);
    EXPECT_EQ(w6.graph.degree(w6.vertex("hub")), 6);
    for (int i = 1; i <= 6; ++i)
        EXPECT_EQ(w6.graph.degree(w6.vertex("rim:" + std::to_string(i))), 3);
    EXPECT_THROW(wheel(2), GraphError);
}

TEST(Families, AlternatingDoubleWheel)
{
    const auto a4 = alt_double_wheel(4);
    EXPECT_EQ(a4.graph.num_vertices(), 10u);
    EXPECT_EQ(a4.graph.num_edges(), 16u);
    for (int k = 2; k <= 9; ++k) {
        const auto a = alt_double_wheel(k);
        EXPECT_EQ(a.graph.degree(a.vertex("hub0")), k);
        EXPECT_EQ(a.graph.degree(a.vertex("hub0'")), k);
        const auto odd = a.graph.neighbors(a.vertex("hub0"));
        for (VertexId v : odd)
            EXPECT_EQ(std::stoi(a.labels.at(v).substr(4)) % 2, 1);
    }
    EXPECT_TRUE(is_planar(alt_double_wheel(5).graph));
    EXPECT_THROW(alt_double_wheel(1), GraphError);
}

TEST(Families, HubLinkedDoubleWheel)
{
    const auto b4 = alt_double_wheel_with_hub_edge(4);
    EXPECT_EQ(b4.graph.num_vertices(), 10u);
    EXPECT_EQ(b4.graph.num_edges(), 17u);
    EXPECT_FALSE(is_planar(b4.graph));
    const auto b2 = alt_double_wheel_with_hub_edge(2);
    EXPECT_EQ(delete_edge(b2.graph, b2.edge("hub-link")), alt_double_wheel(2).graph);
}

TEST(Families, Ladders)
{
    EXPECT_TRUE(isomorphic(mobius_ladder(3).graph, complete_bipartite(3, 3).graph));
    const auto o4 = circular_ladder(4);
    EXPECT_EQ(o4.graph.num_vertices(), 8u);
    EXPECT_EQ(o4.graph.num_edges(), 12u);
    EXPECT_TRUE(is_planar(o4.graph));
    const auto w4 = w_prime(4);
    EXPECT_EQ(w4.graph.num_vertices(), 6u);
    EXPECT_EQ(w4.graph.num_edges(), 9u);
    EXPECT_TRUE(w4.graph.is_simple());
    EXPECT_THROW(ladder(0), GraphError);
    EXPECT_THROW(w_prime(2), GraphError);
}

// W'_k built by explicit contraction of L_k + v1vk (independently of the generator).
TEST(Families, WPrimeMatchesContractionByHand)
{
    for (int k = 3; k <= 6; ++k) {
        Multigraph g = Multigraph::with_vertices(2 * k - 2);
        // v_1..v_k = 0..k-1, u_2..u_{k-1} = k..2k-3
        for (int i = 0; i + 1 < k; ++i)
            g.add_edge(i, i + 1);
        g.add_edge(0, k - 1);
        auto u = [&](int i) { return i == 1 ? 0 : i == k ? k - 1 : k + i - 2; };
        for (int i = 1; i < k; ++i)
            g.add_edge(u(i), u(i + 1));
        for (int i = 2; i < k; ++i)
            g.add_edge(i - 1, u(i));
        EXPECT_TRUE(isomorphic(w_prime(k).graph, g)) << k;
    }
}

TEST(Families, K4k)
{
    EXPECT_EQ(k4k(4).graph.num_vertices(), 8u);
    EXPECT_EQ(k4k(4).graph.num_edges(), 16u);
    const auto s = k4k_split(4);
    EXPECT_EQ(s.graph.num_vertices(), 12u);
    EXPECT_EQ(s.graph.num_edges(), 20u);
    for (int i = 1; i <= 4; ++i) {
        const VertexId v = s.vertex("v:" + std::to_string(i)), w = s.vertex("v':" + std::to_string(i));
        EXPECT_EQ(s.graph.degree(v), 3);
        EXPECT_EQ(s.graph.neighbors(v), (std::vector<VertexId>{s.vertex("x"), s.vertex("y"), w}));
        auto nw = s.graph.neighbors(w);
        std::vector<VertexId> want{v, s.vertex("x'"), s.vertex("y'")};
        std::sort(want.begin(), want.end());
        EXPECT_EQ(nw, want);
    }
}

TEST(Families, OutcomeGraphs)
{
    EXPECT_TRUE(isomorphic(cycle_with_distance_k_chords(2).graph, complete_graph(5)));
    EXPECT_TRUE(isomorphic(cycle_plus_two_hubs(3).graph, complete_graph(5)));
    const auto g = a4_gadget();
    EXPECT_EQ(g.graph.num_vertices(), 12u);
    EXPECT_EQ(g.graph.num_edges(), 19u);
    const Edge& link = g.graph.edge(g.edge("link"));
    EXPECT_EQ(g.graph.degree(link.u), 3);
    EXPECT_EQ(g.graph.degree(link.v), 3);
}

TEST(FamiliesProperty, ClosedFormCounts)
{
    for (int k = 3; k <= 12; ++k) {
        const std::size_t K = static_cast<std::size_t>(k);
        EXPECT_EQ(wheel(k).graph.num_vertices(), K + 1);
        EXPECT_EQ(wheel(k).graph.num_edges(), 2 * K);
        EXPECT_EQ(alt_double_wheel(k).graph.num_vertices(), 2 * K + 2);
        EXPECT_EQ(alt_double_wheel(k).graph.num_edges(), 4 * K);
        EXPECT_EQ(alt_double_wheel_with_hub_edge(k).graph.num_edges(), 4 * K + 1);
        EXPECT_EQ(ladder(k).graph.num_vertices(), 2 * K);
        EXPECT_EQ(ladder(k).graph.num_edges(), 3 * K - 2);
        EXPECT_EQ(w_prime(k).graph.num_vertices(), 2 * K - 2);
        EXPECT_EQ(w_prime(k).graph.num_edges(), 3 * K - 3);
        EXPECT_EQ(circular_ladder(k).graph.num_edges(), 3 * K);
        EXPECT_EQ(mobius_ladder(k).graph.num_edges(), 3 * K);
        EXPECT_EQ(complete_bipartite(3, k).graph.num_edges(), 3 * K);
        EXPECT_EQ(k4k(k).graph.num_vertices(), K + 4);
        EXPECT_EQ(k4k(k).graph.num_edges(), 4 * K);
        EXPECT_EQ(k4k_split(k).graph.num_vertices(), 2 * K + 4);
        EXPECT_EQ(k4k_split(k).graph.num_edges(), 5 * K);
        EXPECT_EQ(cycle_with_distance_k_chords(k).graph.num_vertices(), 2 * K + 1);
        EXPECT_EQ(cycle_with_distance_k_chords(k).graph.num_edges(), 2 * (2 * K + 1));
        EXPECT_EQ(cycle_plus_two_hubs(k).graph.num_vertices(), K + 2);
        EXPECT_EQ(cycle_plus_two_hubs(k).graph.num_edges(), 3 * K + 1);
    }
}

TEST(FamiliesProperty, ThreeConnectedFamilies)
{
    for (int k = 4; k <= 8; ++k) {
        EXPECT_TRUE(is_k_connected(wheel(k).graph, 3)) << k;
        EXPECT_TRUE(is_k_connected(w_prime(k).graph, 3)) << k;
        EXPECT_TRUE(is_k_connected(complete_bipartite(3, k).graph, 3)) << k;
        EXPECT_TRUE(oracle::k_connected(w_prime(k).graph, 3)) << k;
    }
    EXPECT_FALSE(is_k_connected(ladder(4).graph, 3));
    EXPECT_TRUE(is_k_connected(mobius_ladder(4).graph, 3));
}

TEST(FamiliesProperty, PlanarityOfFamilies)
{
    for (int k = 3; k <= 9; ++k) {
        EXPECT_FALSE(is_planar(mobius_ladder(k).graph)) << k;
        EXPECT_TRUE(is_planar(circular_ladder(k).graph)) << k;
        EXPECT_TRUE(is_planar(alt_double_wheel(k).graph)) << k;
    }
    for (int k = 3; k <= 4; ++k) {
        EXPECT_FALSE(oracle::disk_embeddable(mobius_ladder(k).graph).yes);
        const auto o = oracle::disk_embeddable(circular_ladder(k).graph);
        EXPECT_TRUE(o.decided && o.yes);
    }
}

TEST(FamiliesProperty, DegreeSequences)
{
    for (int k = 3; k <= 8; ++k) {
        const auto d = degree_sequence(mobius_ladder(k).graph);
        EXPECT_TRUE(std::all_of(d.begin(), d.end(), [](int x) { return x == 3; }));
        const auto s = degree_sequence(k4k_split(k).graph);
        EXPECT_EQ(std::count(s.begin(), s.end(), 3), k == 3 ? 10 : 2 * k);
        if (k > 3) {
            EXPECT_EQ(std::count(s.begin(), s.end(), k), 4);
        }
    }
}
