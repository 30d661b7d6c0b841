#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "walks.hpp"

namespace opspec {

class multiplicity_error : public std::runtime_error {
public:
    multiplicity_error(const std::string& what, double g) : std::runtime_error(what), gap(g) {}
    double gap;
};

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 0 || n > 4096) throw std::invalid_argument("matrix order out of range");
    }
    static SymmetricMatrix adjacency(const Graph& g) {
        SymmetricMatrix m(g.order());
        for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0;
        return m;
    }
    int order() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void require_symmetric(double tol = 0.0) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) throw std::invalid_argument("matrix is not symmetric");
    }
    std::vector<double> multiply(const std::vector<double>& x) const {
        std::vector<double> y(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            const double* r = &a_[static_cast<std::size_t>(i) * n_];
            double s = 0;
            for (int j = 0; j < n_; ++j) s += r[j] * x[j];
            y[i] = s;
        }
        return y;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

namespace detail {

/// Householder reduction A = Q T Q^T (lower triangle used). Reflector k acts on rows k+1..n-1 with
/// v = (1, w[k+2..]) stored below the subdiagonal, and scale tau[k].
struct Tridiagonal {
    int n = 0;
    std::vector<double> d, e;    // diagonal, subdiagonal (e[i] couples i and i+1)
    std::vector<double> tau;
    std::vector<double> work;    // n x n, holds the reflectors
};

inline Tridiagonal tridiagonalize(const SymmetricMatrix& m) {
    const int n = m.order();
    Tridiagonal t;
    t.n = n;
    t.d.assign(n, 0.0);
    t.e.assign(n, 0.0);
    t.tau.assign(n, 0.0);
    t.work.resize(static_cast<std::size_t>(n) * n);
    auto A = [&](int i, int j) -> double& { return t.work[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) A(i, j) = m(i, j);
    std::vector<double> v(n), p(n);
    for (int k = 0; k + 2 < n; ++k) {
        const int len = n - k - 1;
        double alpha = A(k + 1, k);
        double sigma = 0;
        for (int i = k + 2; i < n; ++i) sigma += A(i, k) * A(i, k);
        if (sigma == 0.0) {
            t.tau[k] = 0.0;
            t.e[k] = alpha;
            continue;
        }
        const double norm = std::sqrt(alpha * alpha + sigma);
        const double beta = alpha <= 0 ? norm : -norm;
        const double tau = (beta - alpha) / beta;
        const double scale = 1.0 / (alpha - beta);
        v[0] = 1.0;
        for (int i = k + 2; i < n; ++i) v[i - k - 1] = A(i, k) *= scale;
        t.tau[k] = tau;
        t.e[k] = beta;
        // p = tau * A22 v  (A22 lower-stored, indices k+1..n-1)
        std::fill(p.begin(), p.begin() + len, 0.0);
        for (int i = 0; i < len; ++i) {
            const double* row = &t.work[static_cast<std::size_t>(i + k + 1) * n + k + 1];
            double s = 0;
            const double vi = v[i];
            for (int j = 0; j < i; ++j) {
                s += row[j] * v[j];
                p[j] += row[j] * vi;
            }
            p[i] += s + row[i] * vi;
        }
        double pv = 0;
        for (int i = 0; i < len; ++i) {
            p[i] *= tau;
            pv += p[i] * v[i];
        }
        const double half = 0.5 * tau * pv;
        for (int i = 0; i < len; ++i) p[i] -= half * v[i];
        // A22 -= v p^T + p v^T
        for (int i = 0; i < len; ++i) {
            double* row = &t.work[static_cast<std::size_t>(i + k + 1) * n + k + 1];
            const double vi = v[i], pi = p[i];
            for (int j = 0; j <= i; ++j) row[j] -= vi * p[j] + pi * v[j];
        }
    }
    for (int k = 0; k < n; ++k) t.d[k] = A(k, k);
    if (n >= 2) t.e[n - 2] = A(n - 1, n - 2);
    if (n >= 1) t.e[n - 1] = 0.0;
    return t;
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues only.
inline std::vector<double> tridiagonal_values(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0, m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (++iter > 60) throw std::runtime_error("QL iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                bool underflow = false;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    e[i + 1] = (r = std::hypot(f, g));
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

/// Inverse iteration on the tridiagonal matrix for eigenvalue `lambda`, Gaussian elimination with
/// partial pivoting on T - lambda I.
inline std::vector<double> tridiagonal_vector(const std::vector<double>& d, const std::vector<double>& e,
                                              double lambda) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return {1.0};
    const double scale = std::max(1.0, std::abs(lambda));
    const double tiny = std::numeric_limits<double>::epsilon() * scale;
    // U has three diagonals (u0 main, u1, u2), L multipliers stored in mult, swaps in piv
    std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
    std::vector<char> piv(n, 0);
    {
        double a = d[0] - lambda, b = n > 1 ? e[0] : 0.0, c = 0.0;
        for (int i = 0; i < n - 1; ++i) {
            // current row: (a, b, c) at columns i, i+1, i+2; next row: (e[i], d[i+1]-lambda, e[i+1])
            double na = e[i], nb = d[i + 1] - lambda, nc = i + 2 < n ? e[i + 1] : 0.0;
            if (std::abs(na) > std::abs(a)) {
                piv[i] = 1;
                u0[i] = na;
                u1[i] = nb;
                u2[i] = nc;
                double mlt = a / na;
                mult[i] = mlt;
                a = b - mlt * nb;
                b = c - mlt * nc;
            } else {
                if (a == 0.0) a = tiny;
                u0[i] = a;
                u1[i] = b;
                u2[i] = c;
                double mlt = na / a;
                mult[i] = mlt;
                a = nb - mlt * b;
                b = nc - mlt * c;
            }
            c = 0.0;
        }
        if (a == 0.0) a = tiny;
        u0[n - 1] = a;
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(1.2345 * i + 0.1);
    for (int it = 0; it < 4; ++it) {
        std::vector<double> y = x;
        // forward: apply the same row operations
        for (int i = 0; i < n - 1; ++i) {
            if (piv[i]) std::swap(y[i], y[i + 1]);
            y[i + 1] -= mult[i] * y[i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            if (i + 1 < n) s -= u1[i] * y[i + 1];
            if (i + 2 < n) s -= u2[i] * y[i + 2];
            y[i] = s / u0[i];
        }
        double norm = 0;
        for (double t : y) norm += t * t;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    return x;
}

inline std::vector<double> back_transform(const Tridiagonal& t, std::vector<double> x) {
    const int n = t.n;
    for (int k = n - 3; k >= 0; --k) {
        if (t.tau[k] == 0.0) continue;
        double s = x[k + 1];
        for (int i = k + 2; i < n; ++i) s += t.work[static_cast<std::size_t>(i) * n + k] * x[i];
        s *= t.tau[k];
        x[k + 1] -= s;
        for (int i = k + 2; i < n; ++i) x[i] -= s * t.work[static_cast<std::size_t>(i) * n + k];
    }
    return x;
}

inline double norm2(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace detail

struct EigenPair {
    int k = 1;                  // 1-based index in non-increasing order
    double value = 0;
    std::vector<double> vector;  // unit norm, largest-magnitude entry positive
    bool simple = true;
    double residual = 0;
};

struct Spectrum {
    std::vector<double> values;  // non-increasing
    std::vector<EigenPair> vectors;
    double residual_bound = 0;

    /// lambda_k - lambda_{k+1}, 1-based.
    double gap(int k) const { return values.at(k - 1) - values.at(k); }
    double operator[](int k) const { return values.at(k - 1); }
};

inline constexpr double kSimplicityThreshold = 1e-8;

namespace detail {

inline EigenPair make_pair_from(const SymmetricMatrix& m, const Tridiagonal& t, const std::vector<double>& values,
                                int k) {
    const int n = m.order();
    EigenPair p;
    p.k = k;
    p.value = values[k - 1];
    double gap = std::numeric_limits<double>::infinity();
    if (k > 1) gap = std::min(gap, values[k - 2] - values[k - 1]);
    if (k < n) gap = std::min(gap, values[k - 1] - values[k]);
    p.simple = gap > kSimplicityThreshold;
    if (!p.simple)
        throw multiplicity_error("eigenvalue " + std::to_string(k) + " is not simple (gap " + std::to_string(gap) + ")",
                                 gap);
    auto y = tridiagonal_vector(t.d, t.e, p.value);
    auto x = back_transform(t, y);
    // Rayleigh refinement of the value, then normalize
    double nx = norm2(x);
    for (double& v : x) v /= nx;
    auto ax = m.multiply(x);
    double rq = 0;
    for (int i = 0; i < n; ++i) rq += x[i] * ax[i];
    p.value = rq;
    std::size_t arg = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[arg]) + 1e-14) arg = i;
    if (x[arg] < 0)
        for (double& v : x) v = -v;
    ax = m.multiply(x);
    double r = 0;
    for (int i = 0; i < n; ++i) r += (ax[i] - p.value * x[i]) * (ax[i] - p.value * x[i]);
    p.residual = std::sqrt(r);
    p.vector = std::move(x);
    return p;
}

}  // namespace detail

/// All eigenvalues; eigenvectors for the requested 1-based indices.
inline Spectrum spectrum(const SymmetricMatrix& m, const std::vector<int>& with_vectors = {}) {
    m.require_symmetric();
    Spectrum s;
    if (m.order() == 0) return s;
    auto t = detail::tridiagonalize(m);
    s.values = detail::tridiagonal_values(t.d, t.e);
    for (int k : with_vectors) {
        if (k < 1 || k > m.order()) throw std::out_of_range("eigenvector index out of range");
        s.vectors.push_back(detail::make_pair_from(m, t, s.values, k));
        s.residual_bound = std::max(s.residual_bound, s.vectors.back().residual);
    }
    return s;
}

inline Spectrum spectrum(const Graph& g, const std::vector<int>& with_vectors = {}) {
    return spectrum(SymmetricMatrix::adjacency(g), with_vectors);
}

/// lambda_k (1-based) of the adjacency matrix.
inline double lambda(const Graph& g, int k) {
    if (k < 1 || k > g.order()) throw std::out_of_range("eigenvalue index out of range");
    return spectrum(g).values[k - 1];
}

inline EigenPair eigenpair(const Graph& g, int k) {
    if (k < 1 || k > g.order()) throw std::out_of_range("eigenvalue index out of range");
    auto s = spectrum(g, {k});
    return s.vectors.front();
}

struct InterlacingResult {
    bool holds = true;
    double max_violation = 0;
};

/// lambda_i(G) >= lambda_i(H) >= lambda_{i+d}(G) for H = G - deleted, d = |deleted|.
inline InterlacingResult check_interlacing(const Graph& g, const std::vector<int>& deleted, double tol = 1e-9) {
    if (deleted.empty() || static_cast<int>(deleted.size()) >= g.order())
        throw std::invalid_argument("deleted set must be a nonempty proper subset");
    const auto G = spectrum(g).values;
    const auto H = spectrum(g.without(deleted)).values;
    const int d = static_cast<int>(deleted.size());
    InterlacingResult r;
    for (std::size_t i = 0; i < H.size(); ++i) {
        r.max_violation = std::max(r.max_violation, H[i] - G[i]);
        r.max_violation = std::max(r.max_violation, G[i + d] - H[i]);
    }
    r.holds = r.max_violation <= tol;
    return r;
}

/// |sum_w x_w w_i(u,w) - lambda_k^i x_u| for the unit eigenvector of lambda_k.
inline double moment_identity_residual(const Graph& g, int k, int i, int u) {
    if (i == 0) return 0.0;
    const auto p = eigenpair(g, k);
    const auto rows = walk_rows(g, u, i);
    double s = 0;
    for (int w = 0; w < g.order(); ++w) s += p.vector[w] * static_cast<double>(rows[i][w]);
    return std::abs(s - std::pow(p.value, i) * p.vector[u]);
}

class degenerate_ratio_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HubRatio {
    double ratio = 0;        // x_{u2} / x_{u1} for the lambda_2 eigenvector
    double lambda2 = 0;
    int cross_edges = 0;     // |E(N(u1), N(u2))| among non-hub vertices
    double predicted = 0;    // -lambda2 / cross_edges when cross_edges > 0
    double deviation = 0;    // |ratio / predicted - 1|
};

inline HubRatio hub_ratio(const Graph& g, int u1, int u2) {
    const auto p = eigenpair(g, 2);
    if (std::abs(p.vector[u1]) < 1e-12) throw degenerate_ratio_error("x_{u1} vanishes");
    HubRatio h;
    h.lambda2 = p.value;
    h.ratio = p.vector[u2] / p.vector[u1];
    for (int a : g.neighbors(u1))
        for (int b : g.neighbors(u2))
            if (a != u2 && b != u1 && a != b && g.has_edge(a, b)) ++h.cross_edges;
    if (h.cross_edges > 0) {
        h.predicted = -h.lambda2 / h.cross_edges;
        h.deviation = std::abs(h.ratio / h.predicted - 1.0);
    }
    return h;
}

}  // namespace opspec
