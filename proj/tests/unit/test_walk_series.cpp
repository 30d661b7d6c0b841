#include <gtest/gtest.h>

#include <opspec/constructions.hpp>
#include <opspec/eigen.hpp>
#include <opspec/walk_series.hpp>

using namespace opspec;

namespace {

std::vector<std::int64_t> ints(const std::vector<Rational>& v) {
    std::vector<std::int64_t> out;
    for (const auto& r : v) {
        EXPECT_TRUE(r.is_integer());
        out.push_back(r.num());
    }
    return out;
}

std::vector<std::int64_t> linear(std::initializer_list<std::pair<int, int>> c, int q) {
    std::vector<std::int64_t> out;
    for (auto [a, b] : c) out.push_back(std::int64_t{a} * q + b);
    return out;
}

SplitSeries split_of(const Graph& g, int u1, int u2, int m) { return split_series(decompose(g, u1, u2, HubMode::split), m); }

}  // namespace

TEST(Series, FanSingleHubTable) {
    const auto s = single_hub_series(fan(10), 0, 6);
    EXPECT_EQ(ints(*s.exact), (std::vector<std::int64_t>{9, 16, 30, 56, 106, 200, 380}));
}

TEST(Series, BridgedSignedMomentsClosedForm) {
    for (int q : {6, 7, 10, 25, 50}) {
        const auto s = series_coefficients(decompose(bridged_double_fan(q), 0, q, HubMode::symmetric), 5);
        // a_i = 1/2 beta^T A^i beta with beta = 1_{N1} - 1_{N2}
        std::vector<std::int64_t> twice;
        for (const auto& r : *s.exact) twice.push_back((r * Rational(2)).num());
        EXPECT_EQ(twice, linear({{2, -2}, {4, -10}, {8, -22}, {16, -56}, {32, -118}, {64, -272}}, q)) << q;
    }
}

TEST(Series, BridgedOrderFiveAtSmallestSize) {
    // the order-5 closed form needs q >= 6; at q = 5 the walks reach the far end of each path
    const auto s = series_coefficients(decompose(bridged_double_fan(5), 0, 5, HubMode::symmetric), 5);
    std::vector<std::int64_t> twice;
    for (const auto& r : *s.exact) twice.push_back((r * Rational(2)).num());
    EXPECT_EQ(twice, (std::vector<std::int64_t>{8, 10, 18, 24, 42, 56}));
}

TEST(Series, DiamondSplitTables) {
    for (int q : {10, 30}) {
        const auto s = split_of(diamond_double_fan(2 * q), 0, q, 6);
        EXPECT_EQ(ints(*s.F1.exact), ints(*s.F2.exact));
        EXPECT_EQ(ints(*s.F2.exact), linear({{1, -1}, {2, -4}, {4, -8}, {8, -16}, {16, -28}, {32, -48}, {64, -64}}, q));
        EXPECT_EQ(ints(*s.D.exact), (std::vector<std::int64_t>{0, 2, 6, 16, 42, 104, 260}));
        EXPECT_EQ(ints(*combined_even(s).exact),
                  linear({{1, -1}, {2, -6}, {4, -14}, {8, -32}, {16, -70}, {32, -152}, {64, -324}}, q));
    }
}

TEST(Series, DiamondOddElimination) {
    for (int q : {10, 30}) {
        const auto s = split_of(diamond_double_fan(2 * q + 1), 0, q, 6);
        const auto e = eliminate_ratio(s);
        const auto want = linear({{1, -1}, {2, -4}, {4, -12}, {8, -32}, {16, -64}, {32, -112}, {64, -232}}, q);
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(e.combined[i], double(want[i]), 1e-9);
        const auto exact = eliminated_exact(s);
        ASSERT_TRUE(exact.has_value());
        EXPECT_EQ(ints(*exact), want);
    }
}

TEST(Series, ParallelJoinDiffersAtOrderThree) {
    for (int n : {21, 41}) {
        const auto p = split_of(g0_prime(Parity::odd, n), 0, n / 2, 6);
        const auto d = split_of(diamond_double_fan(n), 0, n / 2, 6);
        EXPECT_EQ((*p.D.exact)[3], Rational(17));
        EXPECT_EQ((*d.D.exact)[3], Rational(16));
        for (int i = 0; i < 3; ++i) EXPECT_EQ((*p.D.exact)[i], (*d.D.exact)[i]);
    }
}

TEST(Series, ModeErrors) {
    EXPECT_THROW(decompose(fan(6), 0, 1, HubMode::symmetric), asymmetric_hubs_error);
    EXPECT_THROW(series_coefficients(decompose(fan(6), 0, 1, HubMode::split)), std::invalid_argument);
    EXPECT_THROW(series_coefficients(decompose(bridged_double_fan(6), 0, 6, HubMode::bound), kMaxSeriesOrder + 1),
                 std::invalid_argument);
    EXPECT_THROW(decompose(fan(6), 0, 0, HubMode::bound), std::invalid_argument);
    EXPECT_EQ(parse_hub_mode("exact"), HubMode::exact);
    EXPECT_THROW(parse_hub_mode("other"), std::invalid_argument);
}

TEST(Series, ExactModeRatio) {
    const auto d = decompose(bridged_double_fan(12), 0, 12, HubMode::exact);
    EXPECT_NEAR(d.ratio, -1.0, 1e-9);
}

TEST(Series, TailBoundContainsTrueEquation) {
    // lambda^2 - value(lambda) must lie within the tail bound at the true eigenvalue
    for (int q : {8, 20, 60}) {
        const Graph g = bridged_double_fan(q);
        const double l = lambda(g, 2);
        for (int m : {4, 10, 30}) {
            const auto s = series_coefficients(decompose(g, 0, q, HubMode::symmetric), m);
            EXPECT_LE(std::abs(l * l - s.value(l)), s.tail(l) + 1e-9) << q << " " << m;
        }
    }
}

TEST(Series, EnclosuresContainEigenvalues) {
    for (int n : {50, 200}) {
        const auto s = single_hub_series(fan(n), 0, 30);
        const auto r = solve_char_equation(s);
        ASSERT_TRUE(r.certified);
        EXPECT_TRUE(r.enclosure.contains(lambda(fan(n), 1))) << n;
    }
    for (int n : {30, 31, 60, 61}) {
        const auto e = eliminate_ratio(split_of(diamond_double_fan(n), 0, n / 2, 30));
        const auto r = solve_char_equation(e);
        ASSERT_TRUE(r.certified);
        EXPECT_TRUE(r.enclosure.contains(lambda(diamond_double_fan(n), 2))) << n;
    }
}

TEST(Series, CompareRoots) {
    const auto fanq = single_hub_series(fan(40), 0, 30);
    const auto bridged = series_coefficients(decompose(bridged_double_fan(40), 0, 40, HubMode::symmetric), 30);
    const auto c = compare_roots(fanq, bridged);
    EXPECT_EQ(c.verdict, Verdict::f_greater);
    EXPECT_GT(c.margin, 0);
    EXPECT_EQ(compare_roots(bridged, fanq).verdict, Verdict::g_greater);
    EXPECT_EQ(compare_roots(bridged, bridged).verdict, Verdict::undecided);
    EXPECT_THROW(compare_roots(fanq, bridged, Interval{0.5, 1.0}), std::domain_error);
}

TEST(Series, CompareRootsCrossedVersusParallel) {
    for (int n : {21, 41}) {
        const auto d = eliminate_ratio(split_of(diamond_double_fan(n), 0, n / 2, 30));
        const auto p = eliminate_ratio(split_of(g0_prime(Parity::odd, n), 0, n / 2, 30));
        const auto c = compare_roots(d, p);
        EXPECT_EQ(c.verdict, Verdict::f_greater) << c.reason;
        EXPECT_GT(lambda(diamond_double_fan(n), 2), lambda(g0_prime(Parity::odd, n), 2));
    }
}

TEST(Series, ExpansionOfLargestRoot) {
    // pure a0: the root is sqrt(a0) and every correction vanishes
    const auto e0 = expand_largest_root(49, 0, 0, 0, 0);
    EXPECT_DOUBLE_EQ(e0.predicted, 7.0);
    // fan(n) has a0 = n - 1 and a1 = 2n - 4, so the constant correction is a1 / (2 a0)
    const auto s = single_hub_series(fan(401), 0, 4);
    const auto e = expand_largest_root(s.a);
    EXPECT_NEAR(e.c1, (2.0 * 401 - 4) / (2 * 400), 1e-12);
    EXPECT_NEAR(e.predicted, lambda(fan(401), 1), 1e-3);
    EXPECT_THROW(expand_largest_root(0, 1, 1, 1, 1), std::domain_error);
    EXPECT_THROW(expand_largest_root(std::vector<double>{1, 2}), std::invalid_argument);
}
