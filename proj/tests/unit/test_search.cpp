#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include <opspec/constructions.hpp>
#include <opspec/search.hpp>

using namespace opspec;

TEST(Search, ExhaustiveDominatesEveryClass) {
    // the reported best is at least lambda_2 of every enumerated graph
    const auto r = exhaustive_search(8, 2);
    for (const auto& g : enumerate_outerplanar(8, true)) EXPECT_LE(lambda(g, 2), r.best + kTieTolerance);
    EXPECT_EQ(r.candidates, 777);
    EXPECT_GT(r.gap, 0);
}

TEST(Search, ExhaustiveTenIsTheBridgedDoubleFan) {
    const auto r = exhaustive_search(10, 2);
    ASSERT_EQ(r.argmax.size(), 1u);
    EXPECT_EQ(r.argmax[0], class_graph6(bridged_double_fan(5)));
    EXPECT_NEAR(r.best, lambda(bridged_double_fan(5), 2), 1e-12);
    EXPECT_LT(r.residuals.at(0), 1e-10);
}

TEST(Search, TiesAreDeduplicatedByIsomorphism) {
    ArgmaxTracker t;
    const Graph f = fan(6);
    t.offer(f, 1.0);
    t.offer(f.relabel({5, 4, 3, 2, 1, 0}), 1.0 + 1e-12);
    t.offer(bridged_double_fan(3), 1.0);
    t.offer(Graph(6), 0.5);
    const auto r = t.result(6, 2, "test");
    EXPECT_EQ(r.argmax.size(), 2u);
    EXPECT_DOUBLE_EQ(r.runner_up, 0.5);
}

TEST(Search, StructuredEvenOrdersPickBridgedDoubleFan) {
    for (int n : {14, 16, 18}) {
        const auto r = structured_search_two_hub(n, 2);
        ASSERT_EQ(r.argmax.size(), 1u) << n;
        EXPECT_EQ(r.argmax[0], class_graph6(bridged_double_fan(n / 2))) << n;
    }
}

TEST(Search, StructuredOddOrdersReachTheFanValue) {
    for (int n : {15, 21}) {
        const auto r = structured_search_two_hub(n, 2);
        EXPECT_NEAR(r.best, lambda(fan((n - 1) / 2), 1), 1e-9) << n;
    }
}

TEST(Search, TwoConnectedFamilyPicksDiamond) {
    for (int n : {14, 15, 20}) {
        const auto r = extremal_lambda_k(n, 2, "two-hub-structured-2conn");
        ASSERT_EQ(r.argmax.size(), 1u);
        EXPECT_EQ(r.argmax[0], class_graph6(diamond_double_fan(n)));
        EXPECT_GT(r.gap, 0);
    }
}

TEST(Search, StructuredFamiliesOnlyContainOuterplanarMembers) {
    int members = 0;
    SearchOptions o;
    for_each_two_hub_member(13, o, [&](const Graph& g, const std::string&) {
        ++members;
        ASSERT_TRUE(outerplanar(g));
        ASSERT_TRUE(g.connected());
        ASSERT_EQ(g.order(), 13);
    });
    EXPECT_GT(members, 100);
    for_each_three_hub_member(16, [&](const Graph& g, const std::string&) {
        ASSERT_TRUE(outerplanar(g));
        ASSERT_TRUE(g.connected());
    });
}

TEST(Search, CutVertexFamilyEqualsFan) {
    const auto r = cut_vertex_search(13, 2);
    EXPECT_NEAR(r.best, lambda(fan(6), 1), 1e-9);
    // every member attains the same value, so all classes tie and nothing lies below
    EXPECT_GT(r.argmax.size(), 1u);
    EXPECT_TRUE(std::isnan(r.runner_up));
}

TEST(Search, CheckpointResumeReproducesTheRun) {
    const auto path = (std::filesystem::temp_directory_path() / "opspec_ck_test.ndjson").string();
    std::filesystem::remove(path);
    ExhaustiveCheckpoint c{9, 2, 10, 2.0, 1.5, "H??ZCza", {"H??ZCza"}, 40};
    {
        std::ofstream f(path);
        f << to_json(c).dump() << "\n";
    }
    const auto back = read_last_checkpoint(path);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->parent_index, 10);
    EXPECT_EQ(back->ties, c.ties);
    std::filesystem::remove(path);
}

TEST(Search, StructureReport) {
    const auto s = verify_structure(bridged_double_fan(15), 2);
    EXPECT_TRUE(s.simple);
    EXPECT_EQ(s.degrees[0], 14);
    EXPECT_TRUE(hub_degree_pattern(s));
    EXPECT_TRUE(s.extremes_at_hubs);
    EXPECT_EQ(s.cut_vertices.size(), 2u);
    const auto t = verify_structure(fan_star(3, 40), 3);
    EXPECT_TRUE(hub_degree_pattern(t));
}

TEST(Search, Errors) {
    EXPECT_THROW(extremal_lambda_k(10, 2, "nope"), std::invalid_argument);
    EXPECT_THROW(exhaustive_search(12, 2), resource_error);
    EXPECT_THROW(exhaustive_search(5, 6), std::invalid_argument);
    EXPECT_THROW(cut_vertex_search(12), std::invalid_argument);
}

TEST(Search, ConjectureRowsAreConsistentAtSmallSizes) {
    for (const auto& row : conjecture_suite("kq+1", 10)) EXPECT_EQ(row.scope, "exhaustive");
    const auto rows = conjecture_suite("even>=14", 16);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) EXPECT_EQ(r.status, "CONSISTENT") << r.n;
    EXPECT_THROW(conjecture_suite("other", 10), std::invalid_argument);
}

TEST(Search, ThreeHubChainBeatenOnlyAtSmallestOrders) {
    // n = 9 and n = 11 are decided exhaustively and lose to non-chain graphs.
    const auto r3 = conjecture_suite("3q", 15);
    ASSERT_EQ(r3.size(), 3u);
    EXPECT_NE(r3[0].status, "CONSISTENT");
    EXPECT_EQ(r3[1].status, "CONSISTENT");
    EXPECT_EQ(r3[2].status, "CONSISTENT");
    EXPECT_GE(best_triple_fan_chain(4).value, lambda(triple_fan_chain(4), 3));
}
