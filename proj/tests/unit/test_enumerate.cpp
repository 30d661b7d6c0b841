#include <gtest/gtest.h>

#include <set>

#include <opspec/canonical.hpp>
#include <opspec/enumerate.hpp>
#include <opspec/outerplanarity.hpp>

using namespace opspec;

namespace {

std::int64_t count(int n, bool connected, bool outer) {
    EnumerationOptions o;
    o.connected_only = connected;
    o.outerplanar_only = outer;
    return static_cast<std::int64_t>(enumerate_graphs(n, o).graphs.size());
}

}  // namespace

TEST(Enumerate, ConnectedOuterplanarCounts) {
    // isomorphism classes of connected outerplanar graphs
    const std::vector<std::int64_t> want{1, 1, 2, 5, 13, 46, 172, 777, 3783};
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(count(n, true, true), want[n - 1]) << n;
}

TEST(Enumerate, AllOuterplanarCounts) {
    const std::vector<std::int64_t> want{1, 2, 4, 10, 25, 80, 277, 1150};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(count(n, false, true), want[n - 1]) << n;
}

TEST(Enumerate, GeneralGraphCounts) {
    const std::vector<std::int64_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::int64_t> conn{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(count(n, false, false), all[n - 1]) << n;
        EXPECT_EQ(count(n, true, false), conn[n - 1]) << n;
    }
}

TEST(Enumerate, AgreesWithLabeledGeneration) {
    for (int n = 1; n <= 7; ++n)
        for (bool connected : {true, false})
            EXPECT_EQ(count(n, connected, true), count_by_labeled_generation(n, connected)) << n << connected;
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(count(n, false, false), count_by_labeled_generation(n, false, false));
}

TEST(Enumerate, OutputIsCanonicalDistinctAndValid) {
    const auto graphs = enumerate_outerplanar(8, true);
    std::set<std::string> keys;
    std::set<std::uint64_t> codes;
    for (const auto& g : graphs) {
        EXPECT_TRUE(g.connected());
        EXPECT_TRUE(outerplanar(g));
        keys.insert(canonical_key(g));
        codes.insert(permutation_canonical_code(g));
    }
    EXPECT_EQ(keys.size(), graphs.size());
    EXPECT_EQ(codes.size(), graphs.size());
}

TEST(Enumerate, SizeCaps) {
    EXPECT_THROW(enumerate_outerplanar(12, true), resource_error);
    EnumerationOptions o;
    o.outerplanar_only = false;
    EXPECT_THROW(enumerate_graphs(kMaxGeneralEnumeration + 1, o), resource_error);
}

TEST(Enumerate, ResumeTokenCompletesTheRun) {
    EnumerationOptions o;
    o.max_candidates = 500;
    std::set<std::string> merged;
    std::int64_t resumed = 0;
    for (;;) {
        try {
            for (const auto& g : enumerate_graphs(9, o).graphs) merged.insert(graph6_encode(g));
            break;
        } catch (const enumeration_incomplete& e) {
            for (const auto& g : e.partial.graphs) merged.insert(graph6_encode(g));
            o.resume_from = resume_index(e.partial.resume_token);
            ++resumed;
        }
    }
    EXPECT_GT(resumed, 0);
    EXPECT_EQ(merged.size(), 3783u);
}

TEST(Enumerate, ParallelMatchesSerial) {
    const auto a = enumerate_outerplanar(9, true, 1), b = enumerate_outerplanar(9, true, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}
