#include <gtest/gtest.h>

#include <opspec/canonical.hpp>
#include <opspec/constructions.hpp>
#include <opspec/outerplanarity.hpp>

using namespace opspec;

namespace {

bool two_connected(const Graph& g) {
    if (!g.connected()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!g.without({v}).connected()) return false;
    return true;
}

}  // namespace

TEST(Constructions, Fan) {
    for (int n = 2; n <= 30; ++n) {
        const Graph g = fan(n);
        EXPECT_EQ(g.size(), 2 * n - 3);
        EXPECT_EQ(g.degree(0), n - 1);
        EXPECT_TRUE(outerplanar(g));
    }
    EXPECT_THROW(fan(1), std::invalid_argument);
}

TEST(Constructions, BridgedDoubleFan) {
    for (int q = 3; q <= 20; ++q) {
        const Graph g = bridged_double_fan(q);
        EXPECT_EQ(g.order(), 2 * q);
        EXPECT_EQ(g.size(), 2 * (2 * q - 3) + 1);
        EXPECT_TRUE(g.has_edge(q - 1, 2 * q - 1));
        EXPECT_TRUE(outerplanar(g));
        EXPECT_FALSE(two_connected(g));
    }
}

TEST(Constructions, DiamondAndParallelJoins) {
    for (int n = 10; n <= 31; ++n) {
        const Graph d = diamond_double_fan(n), p = g0_prime(n);
        EXPECT_EQ(d.size(), p.size());
        EXPECT_TRUE(outerplanar(d));
        EXPECT_TRUE(outerplanar(p));
        EXPECT_TRUE(two_connected(d));
        EXPECT_NE(canonical_key(d), canonical_key(p));
        EXPECT_EQ(d.degree(n / 2), n - n / 2 - 1);
    }
    EXPECT_THROW(g0_prime(Parity::even, 21), std::invalid_argument);
}

TEST(Constructions, FanStar) {
    for (int k : {2, 3, 4})
        for (int n = 2 * k + 1; n <= 40; ++n) {
            const Graph g = fan_star(k, n);
            EXPECT_EQ(g.order(), n);
            EXPECT_EQ(g.degree(n - 1), k);
            EXPECT_TRUE(outerplanar(g));
            EXPECT_TRUE(g.connected());
            EXPECT_FALSE(g.without({n - 1}).connected());
        }
}

TEST(Constructions, CutVertexFamily) {
    using Attach = std::array<std::vector<int>, 2>;
    const Graph g = cut_vertex_family(6, Attach{std::vector<int>{1, 2}, std::vector<int>{0}});
    EXPECT_EQ(g.order(), 13);
    EXPECT_EQ(g.degree(12), 3);
    EXPECT_FALSE(g.without({12}).connected());
    EXPECT_THROW(cut_vertex_family(6, Attach{std::vector<int>{}, std::vector<int>{0}}), std::invalid_argument);
    EXPECT_THROW(cut_vertex_family(6, Attach{std::vector<int>{1, 2, 3}, std::vector<int>{0}}), std::invalid_argument);
    // hub plus a far path vertex closes a K23 with the fan
    EXPECT_THROW(cut_vertex_family(6, Attach{std::vector<int>{0, 3}, std::vector<int>{0}}), not_outerplanar_error);
}

TEST(Constructions, Figure3) {
    const Graph g = figure3_graph();
    EXPECT_EQ(g.order(), 12);
    EXPECT_TRUE(outerplanar(g));
    EXPECT_TRUE(g.connected());
    EXPECT_EQ(g.size(), 2 * 7 + 2 * 2 + 1);
}

TEST(Constructions, TripleFamilies) {
    for (const auto& [a, b] : triple_fan_chain_variants()) {
        const Graph g = triple_fan_chain(5, a, b);
        EXPECT_EQ(g.order(), 15);
        EXPECT_TRUE(g.connected());
        EXPECT_TRUE(outerplanar(g));
    }
    EXPECT_EQ(triple_fan_chain_variants().size(), 81u);
    EXPECT_EQ(triple_fan_star(4).order(), 13);
}

TEST(Constructions, BuildFamilyTags) {
    EXPECT_EQ(build_family({"fan", 9}), fan(9));
    EXPECT_EQ(build_family({"bridged-double-fan", 0, 7}), bridged_double_fan(7));
    EXPECT_EQ(build_family({"figure3"}), figure3_graph());
    EXPECT_THROW(build_family({"nope", 5}), std::invalid_argument);
}
