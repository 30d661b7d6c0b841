#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "eigen.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "walks.hpp"

namespace opspec {

// Characteristic series for the second eigenvalue of a two-hub graph.
//
// With x the eigenvector, P = G - {u1,u2} and y = x restricted to P, (lambda - A_P) y = x_{u1} 1_{N1} + x_{u2} 1_{N2}.
// For lambda > lambda_1(A_P) the Neumann series gives lambda^2 = sum_i a_i / lambda^i with
// a_i = 1/2 gamma^T A_P^i beta, beta = x_{u1} 1_{N1} + x_{u2} 1_{N2}, gamma = 1_{N1}/x_{u1} + 1_{N2}/x_{u2}.

inline constexpr int kMaxSeriesOrder = 60;
inline constexpr int kDefaultSeriesOrder = 6;

enum class HubMode { symmetric, exact, bound, split };

inline std::string to_string(HubMode m) {
    switch (m) {
        case HubMode::symmetric: return "symmetric";
        case HubMode::exact: return "exact";
        case HubMode::bound: return "bound";
        case HubMode::split: return "split";
    }
    return "?";
}

inline HubMode parse_hub_mode(const std::string& s) {
    if (s == "symmetric") return HubMode::symmetric;
    if (s == "exact") return HubMode::exact;
    if (s == "bound") return HubMode::bound;
    if (s == "split") return HubMode::split;
    throw std::invalid_argument("unknown hub mode: " + s);
}

class asymmetric_hubs_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Interval {
    double lo = 0, hi = 0;
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

struct HubDecomposition {
    Graph g;
    int u1 = 0, u2 = 1;
    HubMode mode = HubMode::symmetric;
    Graph P;                      // g - {u1, u2}
    std::vector<int> p_vertices;  // P vertex i is g vertex p_vertices[i]
    std::vector<int> n1, n2;      // N(u1), N(u2) in P labels
    std::vector<double> beta1, beta2, gamma1, gamma2;
    double ratio = -1;       // x_{u2} / x_{u1}; NaN in split mode
    double ratio_term = -2;  // ratio + 1/ratio as used in the coefficients
    bool hubs_adjacent = false;

    std::vector<double> beta() const { return sum(beta1, beta2); }
    std::vector<double> gamma() const { return sum(gamma1, gamma2); }

private:
    static std::vector<double> sum(const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        return s;
    }
};

namespace detail {

inline bool hubs_symmetric(const Graph& g, int u1, int u2) {
    if (g.order() <= 64 && automorphic(g, u1, u2)) return true;
    try {
        const auto p = eigenpair(g, 2);
        if (std::abs(p.vector[u1]) < 1e-12) return false;
        return std::abs(p.vector[u2] / p.vector[u1] + 1.0) <= 1e-8;
    } catch (const multiplicity_error&) {
        return false;
    }
}

inline double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace detail

inline HubDecomposition decompose(const Graph& g, int u1, int u2, HubMode mode) {
    const int n = g.order();
    if (u1 < 0 || u2 < 0 || u1 >= n || u2 >= n) throw std::out_of_range("hub outside graph");
    if (u1 == u2) throw std::invalid_argument("hubs must be distinct");
    HubDecomposition d;
    d.g = g;
    d.u1 = u1;
    d.u2 = u2;
    d.mode = mode;
    d.hubs_adjacent = g.has_edge(u1, u2);
    std::vector<int> local(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != u1 && v != u2) {
            local[v] = static_cast<int>(d.p_vertices.size());
            d.p_vertices.push_back(v);
        }
    d.P = g.induced(d.p_vertices);
    for (int v : g.neighbors(u1))
        if (v != u2) d.n1.push_back(local[v]);
    for (int v : g.neighbors(u2))
        if (v != u1) d.n2.push_back(local[v]);

    double x1 = 1, x2 = -1;
    switch (mode) {
        case HubMode::symmetric:
            if (!detail::hubs_symmetric(g, u1, u2))
                throw asymmetric_hubs_error("symmetric mode: no automorphism maps u1 to u2 and x_{u2} != -x_{u1}");
            break;
        case HubMode::bound: break;  // ratio + 1/ratio <= -2 replaced by -2
        case HubMode::exact: {
            const auto p = eigenpair(g, 2);
            x1 = p.vector[u1];
            x2 = p.vector[u2];
            if (std::abs(x1) < 1e-12 || std::abs(x2) < 1e-12)
                throw degenerate_ratio_error("hub entry of the second eigenvector vanishes");
            break;
        }
        case HubMode::split: x2 = 1; break;
    }
    const int m = static_cast<int>(d.p_vertices.size());
    d.beta1.assign(m, 0);
    d.beta2.assign(m, 0);
    d.gamma1.assign(m, 0);
    d.gamma2.assign(m, 0);
    for (int v : d.n1) {
        d.beta1[v] = x1;
        d.gamma1[v] = 1 / x1;
    }
    for (int v : d.n2) {
        d.beta2[v] = x2;
        d.gamma2[v] = 1 / x2;
    }
    if (mode == HubMode::split) {
        d.ratio = std::numeric_limits<double>::quiet_NaN();
        d.ratio_term = std::numeric_limits<double>::quiet_NaN();
    } else {
        d.ratio = x2 / x1;
        d.ratio_term = mode == HubMode::exact ? d.ratio + 1 / d.ratio : -2.0;
    }
    return d;
}

/// Upper bound on lambda_1 of a graph: min(max degree, max over edges of sqrt(d_u d_v)), padded for rounding.
inline double spectral_radius_bound(const Graph& g) {
    double best = 0;
    for (auto [u, v] : g.edges()) best = std::max(best, std::sqrt(double(g.degree(u)) * g.degree(v)));
    return std::min(best, double(g.max_degree())) * (1 + 1e-12);
}

/// lambda^2 = sum_{i<=m} a_i / lambda^i + R(lambda) with |R| <= tail(lambda) for lambda > sigma.
struct SeriesEquation {
    std::vector<double> a;
    std::optional<std::vector<Rational>> exact;
    double U = 0;      // |a_i| <= U sigma^i for every i
    double sigma = 0;  // >= lambda_1(A_P)
    Interval validity{0, std::numeric_limits<double>::infinity()};
    std::string label;

    int order() const { return static_cast<int>(a.size()) - 1; }

    double lower_limit() const { return std::max(sigma, validity.lo); }

    double value(double x) const {
        double s = 0, p = 1;
        for (double c : a) {
            s += c / p;
            p *= x;
        }
        return s;
    }

    double derivative(double x) const {
        double s = 0;
        for (int i = 1; i <= order(); ++i) s -= i * a[i] / std::pow(x, i + 1);
        return s;
    }

    double tail(double x) const {
        if (U == 0 || sigma == 0) return 0;
        if (x <= sigma) return std::numeric_limits<double>::infinity();
        return U * sigma * std::pow(sigma / x, order()) / (x - sigma);
    }

    Interval enclose(double x) const {
        const double v = value(x), t = tail(x);
        return {v - t, v + t};
    }

    /// Bound on |d/dmu| of the exact series, and of value -/+ tail, for every mu >= x.
    double slope_bound(double x) const {
        if (x <= sigma) return std::numeric_limits<double>::infinity();
        double s = 0;
        for (int i = 1; i <= order(); ++i) s += i * std::abs(a[i]) / std::pow(x, i + 1);
        if (U == 0 || sigma == 0) return s;
        const int m = order();
        const double r = sigma / x;
        const double exact_tail = U / x * std::pow(r, m + 1) * ((m + 1) - m * r) / ((1 - r) * (1 - r));
        const double bound_tail = tail(x) * (m / x + 1 / (x - sigma));
        return s + std::max(exact_tail, bound_tail);
    }

    /// Upper bound on the signed derivative of the exact series at every mu >= x.
    double derivative_upper(double x) const {
        if (x <= sigma) return std::numeric_limits<double>::infinity();
        double s = 0;
        for (int i = 1; i <= order(); ++i)
            if (a[i] < 0) s += i * -a[i] / std::pow(x, i + 1);
        if (U == 0 || sigma == 0) return s;
        const int m = order();
        const double r = sigma / x;
        return s + U / x * std::pow(r, m + 1) * ((m + 1) - m * r) / ((1 - r) * (1 - r));
    }

    std::pair<double, double> leading() const { return {a.at(0), a.size() > 1 ? a[1] : 0.0}; }
};

struct SplitSeries {
    SeriesEquation F1, F2, D;
};

namespace detail {

inline void check_order(int m) {
    if (m < 0 || m > kMaxSeriesOrder)
        throw std::invalid_argument("series order must lie in 0.." + std::to_string(kMaxSeriesOrder));
}

inline SeriesEquation integer_series(const std::vector<std::int64_t>& moments, double U, double sigma,
                                     std::string label) {
    SeriesEquation s;
    s.exact.emplace();
    for (auto v : moments) {
        s.a.push_back(static_cast<double>(v));
        s.exact->emplace_back(v);
    }
    s.U = U;
    s.sigma = sigma;
    s.validity.lo = sigma;
    s.label = std::move(label);
    return s;
}

}  // namespace detail

/// Three moment families F1 = M(N1,N1), F2 = M(N2,N2), D = M(N1,N2) in A_P.
inline SplitSeries split_series(const HubDecomposition& d, int m = kDefaultSeriesOrder) {
    detail::check_order(m);
    const double sigma = spectral_radius_bound(d.P);
    const double s1 = static_cast<double>(d.n1.size()), s2 = static_cast<double>(d.n2.size());
    SplitSeries s;
    s.F1 = detail::integer_series(walk_moments(d.P, d.n1, d.n1, m).moments, s1, sigma, "F1");
    s.F2 = detail::integer_series(walk_moments(d.P, d.n2, d.n2, m).moments, s2, sigma, "F2");
    s.D = detail::integer_series(walk_moments(d.P, d.n1, d.n2, m).moments, std::sqrt(s1 * s2), sigma, "D");
    return s;
}

/// a_i = 1/2 (M11 + M22 + (rho + 1/rho) M12) for the symmetric, exact and bound modes.
inline SeriesEquation series_coefficients(const HubDecomposition& d, int m = kDefaultSeriesOrder) {
    if (d.mode == HubMode::split) throw std::invalid_argument("split decompositions produce three series; use split_series");
    detail::check_order(m);
    const auto M11 = walk_moments(d.P, d.n1, d.n1, m).moments;
    const auto M22 = walk_moments(d.P, d.n2, d.n2, m).moments;
    const auto M12 = walk_moments(d.P, d.n1, d.n2, m).moments;
    SeriesEquation s;
    s.sigma = spectral_radius_bound(d.P);
    s.validity.lo = s.sigma;
    s.U = 0.5 * detail::norm(d.gamma()) * detail::norm(d.beta());
    s.label = "a(" + to_string(d.mode) + ")";
    if (d.mode == HubMode::exact) {
        for (int i = 0; i <= m; ++i) s.a.push_back(0.5 * (double(M11[i]) + double(M22[i]) + d.ratio_term * double(M12[i])));
    } else {
        s.exact.emplace();
        for (int i = 0; i <= m; ++i) {
            Rational r = Rational(detail::checked_add(M11[i], M22[i]), 2) - Rational(M12[i]);
            s.exact->push_back(r);
            s.a.push_back(r.to_double());
        }
    }
    return s;
}

/// lambda_1 equation for a single hub u: lambda^2 = sum_i M_i(N(u), N(u)) / lambda^i in A_{G-u}.
inline SeriesEquation single_hub_series(const Graph& g, int u, int m = kDefaultSeriesOrder) {
    detail::check_order(m);
    std::vector<int> keep, local(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
        if (v != u) {
            local[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    const Graph P = g.induced(keep);
    std::vector<int> N;
    for (int v : g.neighbors(u)) N.push_back(local[v]);
    return detail::integer_series(walk_moments(P, N, N, m).moments, static_cast<double>(N.size()),
                                  spectral_radius_bound(P), "single-hub");
}

/// F2 - D for hub-symmetric graphs (x_{u2} = -x_{u1} and F1 = F2).
inline SeriesEquation combined_even(const SplitSeries& s) {
    if (*s.F1.exact != *s.F2.exact) throw asymmetric_hubs_error("combined_even needs F1 = F2");
    SeriesEquation c;
    c.exact.emplace();
    for (std::size_t i = 0; i < s.F2.a.size(); ++i) {
        c.exact->push_back((*s.F2.exact)[i] - (*s.D.exact)[i]);
        c.a.push_back(c.exact->back().to_double());
    }
    c.U = s.F2.U + s.D.U;
    c.sigma = std::max(s.F2.sigma, s.D.sigma);
    c.validity.lo = c.sigma;
    c.label = "F2-D";
    return c;
}

inline SeriesEquation combined_even(const HubDecomposition& d, int m = kDefaultSeriesOrder) {
    if (d.mode != HubMode::split) throw std::invalid_argument("combined_even needs a split decomposition");
    return combined_even(split_series(d, m));
}

// ---- formal power series in t = 1/lambda ----

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t len) {
    std::vector<T> c(len, T(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < Rational(0)) return std::nullopt;
    auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
        auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
        for (std::int64_t c = std::max<std::int64_t>(0, s - 2); c <= s + 2; ++c)
            if (c * c == v) return c;
        return std::nullopt;
    };
    auto n = isqrt(r.num()), d = isqrt(r.den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

/// Square root of a power series with c_0 > 0; c_0 must be a perfect square for exact scalars.
template <class T>
std::vector<T> series_sqrt(const std::vector<T>& c) {
    if (c.empty()) return {};
    std::vector<T> b(c.size(), T(0));
    if constexpr (std::is_same_v<T, Rational>) {
        auto r = exact_sqrt(c[0]);
        if (!r) throw std::domain_error("leading coefficient is not a rational square");
        b[0] = *r;
    } else {
        if (!(c[0] > 0)) throw std::domain_error("series square root needs a positive leading coefficient");
        b[0] = std::sqrt(c[0]);
    }
    for (std::size_t k = 1; k < c.size(); ++k) {
        T s = c[k];
        for (std::size_t j = 1; j < k; ++j) s = s - b[j] * b[k - j];
        b[k] = s / (T(2) * b[0]);
    }
    return b;
}

/// Series of 1/2 (F1 + F2 - sqrt((F1 - F2)^2 + 4 D^2)); length shrinks by half the order of vanishing.
template <class T>
std::vector<T> eliminated_series(const std::vector<T>& F1, const std::vector<T>& F2, const std::vector<T>& D) {
    const std::size_t len = std::min({F1.size(), F2.size(), D.size()});
    std::vector<T> diff(len), twoD(len);
    for (std::size_t i = 0; i < len; ++i) {
        diff[i] = F1[i] - F2[i];
        twoD[i] = T(2) * D[i];
    }
    auto Q = series_mul(diff, diff, len);
    auto Q2 = series_mul(twoD, twoD, len);
    for (std::size_t i = 0; i < len; ++i) Q[i] = Q[i] + Q2[i];
    std::size_t j = 0;
    while (j < len && Q[j] == T(0)) ++j;
    std::vector<T> root(len, T(0));
    std::size_t out_len = len;
    if (j < len) {
        if (j % 2 == 1) throw std::domain_error("discriminant series vanishes to odd order");
        if (Q[j] < T(0)) throw std::domain_error("negative discriminant");
        auto r = series_sqrt(std::vector<T>(Q.begin() + static_cast<long>(j), Q.end()));
        out_len = len - j / 2;
        for (std::size_t i = 0; i + j / 2 < out_len; ++i) root[i + j / 2] = r[i];
    }
    std::vector<T> E(out_len);
    for (std::size_t i = 0; i < out_len; ++i) E[i] = (F1[i] + F2[i] - root[i]) / T(2);
    return E;
}

/// lambda^2 = E(F1, F2, D) with interval enclosures derived from the three series tails.
struct EliminatedEquation {
    SeriesEquation F1, F2, D;
    std::vector<double> combined;  // formal expansion of E in 1/lambda

    static double E(double f1, double f2, double d) {
        return 0.5 * (f1 + f2 - std::sqrt((f1 - f2) * (f1 - f2) + 4 * d * d));
    }

    double lower_limit() const { return std::max({F1.lower_limit(), F2.lower_limit(), D.lower_limit()}); }

    double value(double x) const { return E(F1.value(x), F2.value(x), D.value(x)); }

    double derivative(double x) const {
        const double h = 1e-6 * x;
        return (value(x + h) - value(x - h)) / (2 * h);
    }

    /// E is nondecreasing in F1 and F2 and nonincreasing in |D|.
    Interval enclose(double x) const {
        const auto f1 = F1.enclose(x), f2 = F2.enclose(x), d = D.enclose(x);
        const double dmax = std::max(std::abs(d.lo), std::abs(d.hi));
        const double dmin = (d.lo <= 0 && d.hi >= 0) ? 0.0 : std::min(std::abs(d.lo), std::abs(d.hi));
        return {E(f1.lo, f2.lo, dmax), E(f1.hi, f2.hi, dmin)};
    }

    /// Partial derivatives of E are bounded by 1 in absolute value.
    double slope_bound(double x) const { return F1.slope_bound(x) + F2.slope_bound(x) + D.slope_bound(x); }

    /// dE = e1 dF1 + e2 dF2 + eD dD with e1, e2 in [0,1] and |eD| <= 1.
    double derivative_upper(double x) const {
        return std::max(0.0, F1.derivative_upper(x)) + std::max(0.0, F2.derivative_upper(x)) + D.slope_bound(x);
    }

    std::pair<double, double> leading() const { return {combined.at(0), combined.size() > 1 ? combined[1] : 0.0}; }
};

struct RootEnclosure {
    double root = 0;     // root of the truncated equation
    Interval enclosure;  // contains the root of the exact equation
    double tail = 0;     // tail bound at the root
    bool monotone = false;
    bool certified = false;  // both enclosure ends found where the tail bound is finite
};

namespace detail {

template <class F>
double bisect(F&& h, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Root of lambda^2 = s(lambda) by bisection on [sqrt(a0), sqrt(a0) + a1/a0 + 2], with tail enclosure.
template <class Eq>
RootEnclosure solve_char_equation(const Eq& s) {
    const auto [a0, a1] = s.leading();
    if (!(a0 > 0)) throw std::domain_error("characteristic series needs a0 > 0");
    auto h = [&](double x) { return x * x - s.value(x); };
    double lo = std::sqrt(a0), hi = std::sqrt(a0) + a1 / a0 + 2;
    if (!(h(lo) < 0 && h(hi) > 0)) {
        // negative a1 can push the root below sqrt(a0); widen once
        lo = std::max(s.lower_limit(), 1e-9) * (1 + 1e-9);
        hi = std::sqrt(a0) + std::abs(a1) / a0 + 2;
        if (!(h(lo) < 0 && h(hi) > 0)) throw std::domain_error("no sign change in the root bracket");
    }
    RootEnclosure r;
    r.monotone = true;
    for (int k = 0; k <= 16; ++k) {
        const double x = lo + (hi - lo) * k / 16.0;
        if (2 * x - s.derivative(x) <= 0) r.monotone = false;
    }
    r.root = detail::bisect(h, lo, hi);
    r.tail = r.root > s.lower_limit() ? s.enclose(r.root).hi - s.value(r.root) : std::numeric_limits<double>::infinity();

    // x^2 - hi(x) <= h(x) <= x^2 - lo(x); a sign change of h lies between their zeros
    auto h_hi = [&](double x) { return x * x - s.enclose(x).hi; };
    auto h_lo = [&](double x) { return x * x - s.enclose(x).lo; };
    const double floor = s.lower_limit();
    const double step0 = std::max(std::isfinite(r.tail) ? r.tail / (2 * r.root) : 0.0, 1e-12 * r.root);
    r.certified = std::isfinite(r.tail);
    double top = r.root + step0;
    for (int it = 0; it < 80 && !(h_hi(top) > 0); ++it) top = r.root + (top - r.root) * 2;
    if (r.certified && h_hi(top) > 0) {
        double a = r.root, b = top;
        for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, b); ++it) {
            const double mid = 0.5 * (a + b);
            (h_hi(mid) > 0 ? b : a) = mid;
        }
        r.enclosure.hi = b;
    } else {
        r.enclosure.hi = std::numeric_limits<double>::infinity();
        r.certified = false;
    }
    double bottom = r.root - step0;
    for (int it = 0; it < 80 && bottom > floor && !(h_lo(bottom) < 0); ++it) bottom = r.root - (r.root - bottom) * 2;
    if (r.certified && bottom > floor && h_lo(bottom) < 0) {
        double a = bottom, b = r.root;
        for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, b); ++it) {
            const double mid = 0.5 * (a + b);
            (h_lo(mid) < 0 ? a : b) = mid;
        }
        r.enclosure.lo = a;
    } else {
        r.enclosure.lo = floor;
        r.certified = false;
    }
    return r;
}

struct RootExpansion {
    double a0 = 0;
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    double predicted = 0;  // sqrt(a0) + c1 + c2/sqrt(a0) + c3/a0 + c4/a0^{3/2}
};

/// Expansion of the largest root of lambda^2 = sum a_i/lambda^i in powers of 1/sqrt(a0).
inline RootExpansion expand_largest_root(double a0, double a1, double a2, double a3, double a4) {
    if (!(a0 > 0)) throw std::domain_error("expansion needs a0 > 0");
    const double r1 = a1 / a0, r2 = a2 / a0, r3 = a3 / a0, r4 = a4 / a0;
    RootExpansion e;
    e.a0 = a0;
    e.c1 = a1 / (2 * a0);
    e.c2 = -3.0 / 8.0 * r1 * r1 + 0.5 * r2;
    e.c3 = r1 * r1 * r1 / 2 - r1 * r2 + r3 / 2;
    e.c4 = -105.0 / 128.0 * std::pow(r1, 4) + 35.0 / 16.0 * r1 * r1 * r2 - 5.0 / 8.0 * r2 * r2 - 5.0 / 4.0 * r1 * r3 +
           0.5 * r4;
    const double s = std::sqrt(a0);
    e.predicted = s + e.c1 + e.c2 / s + e.c3 / a0 + e.c4 / (a0 * s);
    return e;
}

inline RootExpansion expand_largest_root(const std::vector<double>& a) {
    if (a.size() < 5) throw std::invalid_argument("expansion needs a0..a4");
    return expand_largest_root(a[0], a[1], a[2], a[3], a[4]);
}

inline EliminatedEquation eliminate_ratio(const SeriesEquation& F1, const SeriesEquation& F2, const SeriesEquation& D) {
    EliminatedEquation e{F1, F2, D, eliminated_series(F1.a, F2.a, D.a)};
    return e;
}

inline EliminatedEquation eliminate_ratio(const SplitSeries& s) { return eliminate_ratio(s.F1, s.F2, s.D); }

/// Exact elimination coefficients when all three series are exact and the discriminant lead is a square.
inline std::optional<std::vector<Rational>> eliminated_exact(const SplitSeries& s) {
    if (!s.F1.exact || !s.F2.exact || !s.D.exact) return std::nullopt;
    try {
        return eliminated_series(*s.F1.exact, *s.F2.exact, *s.D.exact);
    } catch (const std::domain_error&) {
        return std::nullopt;
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

enum class Verdict { f_greater, g_greater, undecided };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::f_greater: return "lambda_f > lambda_g";
        case Verdict::g_greater: return "lambda_g > lambda_f";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

struct RootCertificate {
    Verdict verdict = Verdict::undecided;
    Interval interval;       // common interval I
    double margin = 0;       // min over I of the certified gap (f_lo - g_hi or g_lo - f_hi)
    RootEnclosure root_f, root_g;
    int pieces = 0;          // subintervals used to certify the gap
    std::string reason;      // why undecided, empty otherwise
};

namespace detail {

/// Lower bound for min over [a,b] of diff(x), given Lipschitz bound lip(a) on [a,b]; positive-or-fail.
template <class Diff, class Lip>
bool positive_on(Diff&& diff, Lip&& lip, double a, double b, int depth, int& pieces, double& minimum) {
    const double c = 0.5 * (a + b);
    const double v = diff(c);
    minimum = std::min(minimum, v);
    ++pieces;
    if (!(v > 0)) return false;
    if (v - lip(a) * (b - a) / 2 > 0) return true;
    if (depth >= 40 || pieces > 200000) return false;
    return positive_on(diff, lip, a, c, depth + 1, pieces, minimum) &&
           positive_on(diff, lip, c, b, depth + 1, pieces, minimum);
}

}  // namespace detail

/// Certified comparison of the roots of lambda^2 = f(lambda) and lambda^2 = g(lambda) on a common interval.
/// A verdict requires: both exact equations have strictly increasing h on I, both roots are bracketed in I
/// by sign changes of the enclosures, and the lower enclosure of one side exceeds the upper of the other on I.
template <class EqF, class EqG>
RootCertificate compare_roots(const EqF& f, const EqG& g, std::optional<Interval> interval = std::nullopt) {
    RootCertificate c;
    const double floor = std::max(f.lower_limit(), g.lower_limit());
    try {
        c.root_f = solve_char_equation(f);
        c.root_g = solve_char_equation(g);
    } catch (const std::domain_error& e) {
        c.reason = std::string("root bracket failed: ") + e.what();
        return c;
    }
    if (interval) {
        if (!(interval->lo > floor) || !(interval->hi > interval->lo))
            throw std::domain_error("interval lies outside the common validity range");
        c.interval = *interval;
    } else {
        if (!c.root_f.certified || !c.root_g.certified) {
            c.reason = "tail bound too large to enclose a root; raise the truncation order";
            c.interval = {floor, std::max(c.root_f.root, c.root_g.root)};
            return c;
        }
        const double lo = std::min(c.root_f.enclosure.lo, c.root_g.enclosure.lo);
        const double hi = std::max(c.root_f.enclosure.hi, c.root_g.enclosure.hi);
        const double pad = 1e-9 * std::max(1.0, hi);
        c.interval = {std::max(lo - pad, floor * (1 + 1e-12)), hi + pad};
    }
    const Interval I = c.interval;
    // h' = 2 lambda - s'(lambda) >= 2 I.lo - sup s' on I
    auto increasing = [&](const auto& eq) { return 2 * I.lo - eq.derivative_upper(I.lo) > 0; };
    if (!increasing(f) || !increasing(g)) {
        c.reason = "monotonicity of lambda^2 - series not certified on I";
        return c;
    }
    auto bracketed = [&](const auto& eq) {
        return I.lo * I.lo - eq.enclose(I.lo).lo < 0 && I.hi * I.hi - eq.enclose(I.hi).hi > 0;
    };
    if (!bracketed(f) || !bracketed(g)) {
        c.reason = "a root is not bracketed inside I";
        return c;
    }
    auto lip = [&](double x) { return f.slope_bound(x) + g.slope_bound(x); };
    int pieces = 0;
    double min_fg = std::numeric_limits<double>::infinity();
    if (detail::positive_on([&](double x) { return f.enclose(x).lo - g.enclose(x).hi; }, lip, I.lo, I.hi, 0, pieces,
                            min_fg)) {
        c.verdict = Verdict::f_greater;
        c.margin = min_fg;
        c.pieces = pieces;
        return c;
    }
    pieces = 0;
    double min_gf = std::numeric_limits<double>::infinity();
    if (detail::positive_on([&](double x) { return g.enclose(x).lo - f.enclose(x).hi; }, lip, I.lo, I.hi, 0, pieces,
                            min_gf)) {
        c.verdict = Verdict::g_greater;
        c.margin = min_gf;
        c.pieces = pieces;
        return c;
    }
    c.margin = std::max(min_fg, min_gf);
    c.reason = "enclosures overlap on I";
    return c;
}

}  // namespace opspec
