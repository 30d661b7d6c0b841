#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace opspec {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("walk count overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("walk count overflow");
    return r;
}

/// y = A x with overflow checks.
inline std::vector<std::int64_t> apply(const std::vector<std::vector<int>>& adj, const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> y(adj.size(), 0);
    for (std::size_t u = 0; u < adj.size(); ++u) {
        std::int64_t s = 0;
        for (int v : adj[u]) s = checked_add(s, x[v]);
        y[u] = s;
    }
    return y;
}

inline std::vector<std::int64_t> indicator(int n, const std::vector<int>& set) {
    std::vector<std::int64_t> x(n, 0);
    for (int v : set) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex set outside graph");
        x[v] = 1;
    }
    return x;
}

inline std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

}  // namespace detail

/// moments[i] = 1_S^T A^i 1_T for i = 0..m.
struct WalkTable {
    std::vector<int> source;
    std::vector<int> target;
    int order = 0;
    std::vector<std::int64_t> moments;
};

inline WalkTable walk_moments(const Graph& g, const std::vector<int>& S, const std::vector<int>& T, int m) {
    if (m < 0) throw std::invalid_argument("walk order must be nonnegative");
    const auto adj = g.adjacency_lists();
    const auto s = detail::indicator(g.order(), S);
    auto x = detail::indicator(g.order(), T);
    WalkTable t{S, T, m, {}};
    t.moments.reserve(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (i > 0) x = detail::apply(adj, x);
        t.moments.push_back(detail::dot(s, x));
    }
    return t;
}

/// Row u of A^i for i = 0..m: result[i][w] = number of u-w walks of length i.
inline std::vector<std::vector<std::int64_t>> walk_rows(const Graph& g, int u, int m) {
    const auto adj = g.adjacency_lists();
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> x(g.order(), 0);
    x[u] = 1;
    rows.push_back(x);
    for (int i = 1; i <= m; ++i) rows.push_back(x = detail::apply(adj, x));
    return rows;
}

/// x^T A^i y for rational vectors, exact. Scales to integers by the lcm of denominators.
inline Rational bilinear_walk_moment(const Graph& g, const std::vector<Rational>& x, const std::vector<Rational>& y,
                                     int i) {
    const int n = g.order();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("weight vector length differs from graph order");
    auto lcm_of = [](const std::vector<Rational>& v) {
        std::int64_t l = 1;
        for (const auto& r : v) l = detail::checked_mul(l / std::gcd(l, r.den()), r.den());
        return l;
    };
    const std::int64_t lx = lcm_of(x), ly = lcm_of(y);
    std::vector<std::int64_t> X(n), Y(n);
    for (int v = 0; v < n; ++v) {
        X[v] = detail::checked_mul(x[v].num(), lx / x[v].den());
        Y[v] = detail::checked_mul(y[v].num(), ly / y[v].den());
    }
    const auto adj = g.adjacency_lists();
    // split the power between both sides to keep intermediates small
    for (int k = 0; k < i / 2; ++k) X = detail::apply(adj, X);
    for (int k = 0; k < i - i / 2; ++k) Y = detail::apply(adj, Y);
    return Rational(detail::dot(X, Y)) / (Rational(lx) * Rational(ly));
}

/// w^T A^i w, exact.
inline Rational signed_walk_moment(const Graph& g, const std::vector<Rational>& w, int i) {
    return bilinear_walk_moment(g, w, w, i);
}

namespace detail {

inline void count_paths_dfs(const Graph& g, int at, int target, int left, std::vector<char>& used,
                            std::int64_t& count) {
    if (left == 1) {
        if (g.has_edge(at, target)) ++count;
        return;
    }
    for (int w : g.neighbors(at)) {
        if (used[w] || w == target) continue;
        used[w] = 1;
        count_paths_dfs(g, w, target, left - 1, used, count);
        used[w] = 0;
    }
}

}  // namespace detail

/// Number of u-v paths with exactly i edges and distinct vertices.
inline std::int64_t count_paths(const Graph& g, int u, int v, int i) {
    if (u == v) throw std::invalid_argument("count_paths needs distinct endpoints");
    if (i < 1 || i > 4) throw std::invalid_argument("path length must be in 1..4");
    std::vector<char> used(g.order(), 0);
    used[u] = 1;
    std::int64_t count = 0;
    detail::count_paths_dfs(g, u, v, i, used, count);
    return count;
}

struct PathCounts {
    int u = 0, v = 0;
    std::int64_t h2 = 0, h3 = 0, h4 = 0;
};

inline PathCounts path_counts(const Graph& g, int u, int v) {
    return {u, v, count_paths(g, u, v, 2), count_paths(g, u, v, 3), count_paths(g, u, v, 4)};
}

inline std::int64_t triangles_at(const Graph& g, int u) {
    auto nb = g.neighbors(u);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) ++t;
    return t;
}

/// 4-cycles through u: pairs of neighbours {a,b} with a common neighbour w != u, each cycle once.
inline std::int64_t four_cycles_at(const Graph& g, int u) {
    auto nb = g.neighbors(u);
    std::int64_t c = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            for (int w : g.neighbors(nb[i]))
                if (w != u && w != nb[j] && g.has_edge(w, nb[j])) ++c;
    return c;
}

}  // namespace opspec
