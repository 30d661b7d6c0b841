#include <gtest/gtest.h>

#include <opspec/cone_planarity.hpp>
#include <opspec/constructions.hpp>
#include <opspec/outerplanarity.hpp>

#include "generators.hpp"

using namespace opspec;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph k23() {
    Graph g(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) g.add_edge(a, b);
    return g;
}

}  // namespace

TEST(Outerplanarity, SmallKnownCases) {
    EXPECT_TRUE(outerplanar(complete(3)));
    EXPECT_FALSE(outerplanar(complete(4)));
    EXPECT_FALSE(outerplanar(k23()));
    Graph k4e = complete(4);
    k4e.remove_edge(0, 1);
    EXPECT_TRUE(outerplanar(k4e));
    EXPECT_TRUE(outerplanar(Graph(1)));
    EXPECT_TRUE(outerplanar(Graph(7)));
}

TEST(Outerplanarity, WitnessesAreValid) {
    for (const Graph& g : {complete(4), k23(), complete(6)}) {
        const auto c = is_outerplanar(g);
        ASSERT_FALSE(c.outerplanar);
        ASSERT_TRUE(c.witness.has_value());
        EXPECT_TRUE(validate_witness(g, *c.witness));
        EXPECT_TRUE(validate_certificate(g, c));
    }
    const auto k23c = is_outerplanar(k23());
    EXPECT_EQ(k23c.witness->kind, MinorKind::K23);
}

TEST(Outerplanarity, SubdividedK4Witness) {
    Graph g(8);
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    for (int i = 0; i < 6; ++i) {
        if (i < 4) {
            g.add_edge(pairs[i][0], next);
            g.add_edge(next, pairs[i][1]);
            ++next;
        } else {
            g.add_edge(pairs[i][0], pairs[i][1]);
        }
    }
    const auto c = is_outerplanar(g);
    ASSERT_FALSE(c.outerplanar);
    EXPECT_TRUE(validate_witness(g, *c.witness));
}

TEST(Outerplanarity, EmbeddingsValidateOnFamilies) {
    for (const Graph& g : {fan(9), bridged_double_fan(7), diamond_double_fan(15), figure3_graph(), fan_star(3, 13),
                           triple_fan_chain(5), g0_prime(20)}) {
        const auto c = is_outerplanar(g);
        ASSERT_TRUE(c.outerplanar) << graph6_encode(g);
        EXPECT_TRUE(validate_embedding(g, c.embedding));
    }
}

TEST(Outerplanarity, OraclesAgreeOnRandomGraphs) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 1500; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 11)(rng);
        const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        const Graph g = t % 3 == 0 ? gen::random_outerplanar(rng, n) : gen::random_graph(rng, n, p);
        const bool a = outerplanar(g), b = outerplanar_by_cone(g), c = outerplanar_by_minors(g);
        ASSERT_EQ(a, b) << graph6_encode(g);
        ASSERT_EQ(a, c) << graph6_encode(g);
        ASSERT_TRUE(validate_certificate(g, is_outerplanar(g))) << graph6_encode(g);
    }
}

TEST(Outerplanarity, RandomOuterplanarAreRecognized) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = std::uniform_int_distribution<int>(3, 300)(rng);
        const Graph g = gen::random_outerplanar(rng, n, 1.0);
        EXPECT_EQ(g.size(), 2 * n - 3);  // maximal outerplanar
        EXPECT_TRUE(outerplanar(g));
        Graph h = g;
        // a maximal outerplanar graph plus any new edge is not outerplanar
        for (int u = 0; u < n; ++u) {
            int v = (u + n / 2) % n;
            if (u != v && !h.has_edge(u, v)) {
                h.add_edge(u, v);
                break;
            }
        }
        if (h.size() > g.size()) EXPECT_FALSE(outerplanar(h));
    }
}

TEST(Outerplanarity, MinorOracleSizeCap) { EXPECT_THROW(find_minor(Graph(25), MinorKind::K4), resource_error); }
