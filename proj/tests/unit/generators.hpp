#pragma once

// Seeded random generators shared by the property tests.
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <opspec/graph.hpp>

namespace gen {

inline opspec::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    opspec::Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random maximal outerplanar graph (triangulated polygon) with some chords removed, relabeled.
inline opspec::Graph random_outerplanar(std::mt19937_64& rng, int n, double keep_chord = 0.6) {
    opspec::Graph g(n);
    if (n < 2) return g;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (n >= 3) g.add_edge(0, n - 1);
    // ear-clip triangulation of the polygon 0..n-1
    std::vector<int> poly(n);
    std::iota(poly.begin(), poly.end(), 0);
    std::bernoulli_distribution keep(keep_chord);
    while (poly.size() > 3) {
        std::uniform_int_distribution<std::size_t> pick(0, poly.size() - 1);
        const std::size_t i = pick(rng);
        const int a = poly[(i + poly.size() - 1) % poly.size()], c = poly[(i + 1) % poly.size()];
        if (keep(rng) && !g.has_edge(a, c)) g.add_edge(a, c);
        poly.erase(poly.begin() + static_cast<long>(i));
    }
    return g.relabel(random_permutation(rng, n));
}

/// Random tree by Pruefer-like attachment.
inline opspec::Graph random_tree(std::mt19937_64& rng, int n) {
    opspec::Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    return g;
}

}  // namespace gen
