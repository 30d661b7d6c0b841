#include <gtest/gtest.h>

#include <opspec/graph.hpp>

#include "generators.hpp"

using namespace opspec;

TEST(Graph, EdgesAndDegrees) {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 4);
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.degree(1), 3);
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_TRUE(g.has_edge(4, 1));
    EXPECT_FALSE(g.connected());
    g.add_edge(3, 2);
    EXPECT_TRUE(g.connected());
    g.remove_edge(1, 2);
    EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(Graph, RejectsLoopsAndRange) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_THROW(Graph(Graph::kMaxOrder + 1), std::invalid_argument);
}

TEST(Graph, InducedAndWithout) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    const Graph h = g.without({1});
    EXPECT_EQ(h.order(), 3);
    EXPECT_EQ(h.size(), 1);
    EXPECT_TRUE(h.has_edge(1, 2));
}

TEST(Graph, WideRowsBeyondOneWord) {
    Graph g(200);
    for (int v = 1; v < 200; ++v) g.add_edge(0, v);
    EXPECT_EQ(g.degree(0), 199);
    EXPECT_EQ(g.neighbors(0).back(), 199);
    EXPECT_TRUE(g.connected());
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(graph6_encode(Graph(0)), "?");
    Graph k2(2);
    k2.add_edge(0, 1);
    EXPECT_EQ(graph6_encode(k2), "A_");
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    EXPECT_EQ(graph6_encode(k3), "Bw");
    // path 0-1-2-3-4 bits 101001 0001(00)
    Graph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    EXPECT_EQ(graph6_encode(p5), "DhC");
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(0, 70)(rng);
        const Graph g = gen::random_graph(rng, n, 0.3);
        const auto s = graph6_encode(g);
        EXPECT_EQ(graph6_decode(s), g) << s;
        EXPECT_EQ(graph6_decode(">>graph6<<" + s + "\n"), g);
    }
}

TEST(Graph6, LongHeader) {
    Graph g(100);
    g.add_edge(3, 97);
    const auto s = graph6_encode(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(graph6_decode(s), g);
}

TEST(Graph6, MalformedInput) {
    EXPECT_THROW(graph6_decode(""), graph6_error);
    EXPECT_THROW(graph6_decode("D"), graph6_error);
    EXPECT_THROW(graph6_decode("A\x01"), graph6_error);
}
