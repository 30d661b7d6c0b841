#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <numbers>

#include <opspec/constructions.hpp>
#include <opspec/eigen.hpp>

#include "generators.hpp"

using namespace opspec;

namespace {

std::vector<double> eigen_oracle(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) A(u, v) = A(v, u) = 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(vals.rbegin(), vals.rend());
    return vals;
}

}  // namespace

TEST(Eigen, PathSpectrumClosedForm) {
    for (int n : {2, 5, 17, 60}) {
        Graph p(n);
        for (int i = 0; i + 1 < n; ++i) p.add_edge(i, i + 1);
        const auto s = spectrum(p);
        for (int j = 1; j <= n; ++j) EXPECT_NEAR(s[j], 2 * std::cos(std::numbers::pi * j / (n + 1)), 1e-10);
    }
}

TEST(Eigen, StarAndComplete) {
    Graph star(10), k(7);
    for (int v = 1; v < 10; ++v) star.add_edge(0, v);
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) k.add_edge(u, v);
    EXPECT_NEAR(lambda(star, 1), 3.0, 1e-12);
    EXPECT_NEAR(lambda(star, 10), -3.0, 1e-12);
    EXPECT_NEAR(lambda(k, 1), 6.0, 1e-12);
    EXPECT_NEAR(lambda(k, 2), -1.0, 1e-12);
}

TEST(Eigen, AgreesWithIndependentSolver) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 60; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 80)(rng);
        const Graph g = t % 2 ? gen::random_outerplanar(rng, n) : gen::random_graph(rng, n, 0.2);
        const auto ours = spectrum(g).values, ref = eigen_oracle(g);
        for (int i = 0; i < n; ++i) ASSERT_NEAR(ours[i], ref[i], 1e-9) << graph6_encode(g);
    }
}

TEST(Eigen, EigenpairResidualAndSign) {
    const auto p = eigenpair(bridged_double_fan(30), 2);
    EXPECT_LT(p.residual, 1e-10);
    double norm = 0, big = 0;
    for (double x : p.vector) {
        norm += x * x;
        if (std::abs(x) > std::abs(big)) big = x;
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_GT(big, 0);
    // hubs carry opposite signs on the second eigenvector
    EXPECT_LT(p.vector[0] * p.vector[30], 0);
}

TEST(Eigen, MultipleEigenvalueRaises) {
    Graph k(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k.add_edge(u, v);
    EXPECT_THROW(eigenpair(k, 2), multiplicity_error);
    EXPECT_NO_THROW(eigenpair(k, 1));
}

TEST(Eigen, InterlacingOnRandomInducedSubgraphs) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(3, 25)(rng);
        const Graph g = gen::random_graph(rng, n, 0.4);
        auto drop = gen::random_permutation(rng, n);
        drop.resize(std::uniform_int_distribution<int>(1, n - 1)(rng));
        const auto r = check_interlacing(g, drop);
        ASSERT_TRUE(r.holds) << r.max_violation;
    }
    EXPECT_THROW(check_interlacing(fan(5), {}), std::invalid_argument);
}

TEST(Eigen, MomentIdentity) {
    const Graph g = diamond_double_fan(16);
    for (int i = 0; i <= 6; ++i)
        for (int u : {0, 3, 8}) EXPECT_LT(moment_identity_residual(g, 2, i, u), 1e-8);
}

TEST(Eigen, HubRatio) {
    const auto r = hub_ratio(bridged_double_fan(10), 0, 10);
    EXPECT_NEAR(r.ratio, -1.0, 1e-9);
}
