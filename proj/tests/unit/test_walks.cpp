#include <gtest/gtest.h>

#include <functional>

#include <opspec/constructions.hpp>
#include <opspec/rational.hpp>
#include <opspec/walks.hpp>

#include "generators.hpp"

using namespace opspec;

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// Paths with exactly `len` edges from u to v, by brute-force sequence search.
std::int64_t brute_paths(const Graph& g, int u, int v, int len) {
    std::int64_t count = 0;
    std::vector<int> seq{u};
    std::function<void()> go = [&] {
        if (static_cast<int>(seq.size()) == len + 1) {
            count += seq.back() == v;
            return;
        }
        for (int w = 0; w < g.order(); ++w) {
            if (!g.has_edge(seq.back(), w) || std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            seq.push_back(w);
            go();
            seq.pop_back();
        }
    };
    go();
    return count;
}

}  // namespace

TEST(Rational, ArithmeticAndNormalization) {
    const Rational a(6, -4), b(1, 3);
    EXPECT_EQ(a.num(), -3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(a + b, Rational(-7, 6));
    EXPECT_EQ(a * b, Rational(-1, 2));
    EXPECT_EQ(a / b, Rational(-9, 2));
    EXPECT_TRUE(b < Rational(1, 2));
    EXPECT_EQ(Rational(5, 10).str(), "1/2");
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(INT64_MAX) + Rational(INT64_MAX), std::overflow_error);
}

TEST(Walks, MomentsMatchMatrixPowers) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 40; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 18)(rng);
        const Graph g = gen::random_graph(rng, n, 0.3);
        Matrix A(n, std::vector<std::int64_t>(n, 0)), P(n, std::vector<std::int64_t>(n, 0));
        for (auto [u, v] : g.edges()) A[u][v] = A[v][u] = 1;
        for (int i = 0; i < n; ++i) P[i][i] = 1;
        std::vector<int> S, T;
        for (int v = 0; v < n; ++v) {
            if (v % 2 == 0) S.push_back(v);
            if (v % 3 != 1) T.push_back(v);
        }
        const auto table = walk_moments(g, S, T, 7);
        for (int i = 0; i <= 7; ++i) {
            std::int64_t want = 0;
            for (int s : S)
                for (int w : T) want += P[s][w];
            ASSERT_EQ(table.moments[i], want);
            P = multiply(P, A);
        }
    }
}

TEST(Walks, OverflowIsDetected) {
    Graph k(60);
    for (int u = 0; u < 60; ++u)
        for (int v = u + 1; v < 60; ++v) k.add_edge(u, v);
    std::vector<int> all(60);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_THROW(walk_moments(k, all, all, 14), std::overflow_error);
}

TEST(Walks, SignedMomentEqualsBilinear) {
    const Graph g = fan(8);
    std::vector<Rational> w(8);
    for (int v = 0; v < 8; ++v) w[v] = Rational(v % 3 - 1, v + 1);
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(signed_walk_moment(g, w, i), bilinear_walk_moment(g, w, w, i));
    // w^T A^0 w = |w|^2
    Rational sq = 0;
    for (const auto& x : w) sq += x * x;
    EXPECT_EQ(signed_walk_moment(g, w, 0), sq);
}

TEST(Walks, PathCountsMatchBruteForce) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        const int n = std::uniform_int_distribution<int>(4, 10)(rng);
        const Graph g = t % 2 ? gen::random_outerplanar(rng, n) : gen::random_graph(rng, n, 0.5);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const auto p = path_counts(g, u, v);
                ASSERT_EQ(p.h2, brute_paths(g, u, v, 2));
                ASSERT_EQ(p.h3, brute_paths(g, u, v, 3));
                ASSERT_EQ(p.h4, brute_paths(g, u, v, 4));
            }
    }
}

TEST(Walks, LocalCounts) {
    const Graph f = fan(6);
    EXPECT_EQ(triangles_at(f, 0), 4);
    EXPECT_EQ(triangles_at(f, 1), 1);
    Graph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    EXPECT_EQ(four_cycles_at(c4, 0), 1);
}
