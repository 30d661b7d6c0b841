#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "outerplanarity.hpp"

namespace opspec {

// Labeling: components are consecutive blocks; inside a fan block the hub comes first, then the path
// in order. Extra vertices (cut vertex, apexes) follow their block or come last.

namespace detail {

/// Adds fan(size) at offset: hub `offset`, path offset+1 .. offset+size-1.
inline void add_fan(Graph& g, int offset, int size) {
    for (int i = 1; i < size; ++i) {
        g.add_edge(offset, offset + i);
        if (i + 1 < size) g.add_edge(offset + i, offset + i + 1);
    }
}

}  // namespace detail

inline Graph fan(int n) {
    if (n < 2) throw std::invalid_argument("fan needs n >= 2");
    Graph g(n);
    detail::add_fan(g, 0, n);
    return g;
}

/// Two fan(q) copies at 0..q-1 and q..2q-1, bridged between the last path vertices q-1 and 2q-1.
inline Graph bridged_double_fan(int q) {
    if (q < 3) throw std::invalid_argument("bridged_double_fan needs q >= 3");
    Graph g(2 * q);
    detail::add_fan(g, 0, q);
    detail::add_fan(g, q, q);
    g.add_edge(q - 1, 2 * q - 1);
    return g;
}

namespace detail {

/// fan(floor(n/2)) at 0 and fan(ceil(n/2)) at a = floor(n/2), plus two edges between the first two
/// path vertices of each side. `crossed` pairs first with second; otherwise first with first.
inline Graph two_fans_two_edges(int n, bool crossed) {
    const int a = n / 2;
    Graph g(n);
    add_fan(g, 0, a);
    add_fan(g, a, n - a);
    if (crossed) {
        g.add_edge(1, a + 2);
        g.add_edge(2, a + 1);
    } else {
        g.add_edge(1, a + 1);
        g.add_edge(2, a + 2);
    }
    return g;
}

}  // namespace detail

/// Hubs are 0 and floor(n/2); for odd n the larger hub is floor(n/2).
inline Graph diamond_double_fan(int n) {
    if (n < 8) throw std::invalid_argument("diamond_double_fan needs n >= 8");
    return detail::two_fans_two_edges(n, true);
}

enum class Parity { even, odd };

/// Same frame as diamond_double_fan with the two joining edges parallel (first-first, second-second).
inline Graph g0_prime(Parity parity, int n) {
    if (n < 10) throw std::invalid_argument("g0_prime needs n >= 10");
    if ((n % 2 == 0) != (parity == Parity::even)) throw std::invalid_argument("g0_prime: parity does not match n");
    return detail::two_fans_two_edges(n, false);
}

inline Graph g0_prime(int n) { return g0_prime(n % 2 == 0 ? Parity::even : Parity::odd, n); }

/// n = kq + r with 1 <= r <= k: r-1 copies of fan(q+1), then k-r+1 copies of fan(q), and a centre
/// (vertex n-1) adjacent to the first path vertex of every copy.
inline Graph fan_star(int k, int n) {
    if (k < 2) throw std::invalid_argument("fan_star needs k >= 2");
    const int q = (n - 1) / k;
    const int r = n - k * q;
    if (q < 2) throw std::invalid_argument("fan_star needs n >= 2k + 1");
    Graph g(n);
    const int centre = n - 1;
    int offset = 0;
    for (int c = 0; c < k; ++c) {
        const int size = c < r - 1 ? q + 1 : q;
        detail::add_fan(g, offset, size);
        g.add_edge(centre, offset + 1);
        offset += size;
    }
    return g;
}

/// Two fan(q) copies at 0..q-1 and q..2q-1 plus u = 2q. attach[s] lists 1-2 local vertices
/// (0 = hub, 1..q-1 = path) of side s adjacent to u.
inline Graph cut_vertex_family(int q, const std::array<std::vector<int>, 2>& attach) {
    if (q < 3) throw std::invalid_argument("cut_vertex_family needs q >= 3");
    Graph g(2 * q + 1);
    detail::add_fan(g, 0, q);
    detail::add_fan(g, q, q);
    for (int s = 0; s < 2; ++s) {
        const auto& a = attach[s];
        if (a.empty() || a.size() > 2) throw std::invalid_argument("each side attaches to 1 or 2 vertices");
        for (int v : a) {
            if (v < 0 || v >= q) throw std::invalid_argument("attachment vertex outside the fan");
            if (g.has_edge(2 * q, s * q + v)) throw std::invalid_argument("repeated attachment vertex");
            g.add_edge(2 * q, s * q + v);
        }
    }
    auto cert = is_outerplanar(g);
    if (!cert.outerplanar) throw not_outerplanar_error("attachment breaks outerplanarity", *cert.witness);
    return g;
}

/// Fans at 0..4 and 6..10 (hub + P4), apexes 5 and 11 on the middle path edges, bridge 5-11.
inline Graph figure3_graph() {
    Graph g(12);
    for (int off : {0, 6}) {
        detail::add_fan(g, off, 5);
        g.add_edge(off + 5, off + 2);
        g.add_edge(off + 5, off + 3);
    }
    g.add_edge(5, 11);
    return g;
}

/// Where a gluing edge touches a fan copy.
enum class FanSide { hub, first_end, last_end };

struct ChainGlue {
    FanSide left, right;  // left side in copy i, right side in copy i+1
};

/// Three fan(q) copies at 0, q, 2q joined by one edge between copies 0-1 and one between 1-2.
/// Default gluing joins the last path vertex of copy i to the hub of copy i+1.
inline Graph triple_fan_chain(int q, ChainGlue first = {FanSide::last_end, FanSide::hub},
                              ChainGlue second = {FanSide::last_end, FanSide::hub}) {
    if (q < 3) throw std::invalid_argument("triple_fan_chain needs q >= 3");
    Graph g(3 * q);
    for (int c = 0; c < 3; ++c) detail::add_fan(g, c * q, q);
    auto at = [q](int copy, FanSide s) {
        const int base = copy * q;
        return s == FanSide::hub ? base : s == FanSide::first_end ? base + 1 : base + q - 1;
    };
    const int a = at(0, first.left), b = at(1, first.right);
    const int c = at(1, second.left), d = at(2, second.right);
    g.add_edge(a, b);
    g.add_edge(c, d);
    return g;
}

/// All 81 side combinations for the two gluing edges (isomorphic duplicates included).
inline std::vector<std::pair<ChainGlue, ChainGlue>> triple_fan_chain_variants() {
    std::vector<std::pair<ChainGlue, ChainGlue>> out;
    const FanSide sides[] = {FanSide::hub, FanSide::first_end, FanSide::last_end};
    for (auto a : sides)
        for (auto b : sides)
            for (auto c : sides)
                for (auto d : sides) out.push_back({{a, b}, {c, d}});
    return out;
}

inline Graph triple_fan_star(int q) {
    if (q < 3) throw std::invalid_argument("triple_fan_star needs q >= 3");
    return fan_star(3, 3 * q + 1);
}

/// Family tag plus size parameters, as accepted by the CLI.
struct FamilySpec {
    std::string family;
    int n = 0, q = 0, k = 0;
    std::array<std::vector<int>, 2> attach;
};

inline Graph build_family(const FamilySpec& s) {
    const std::string& f = s.family;
    if (f == "fan") return fan(s.n);
    if (f == "bridged-double-fan") return bridged_double_fan(s.q ? s.q : s.n / 2);
    if (f == "diamond-double-fan") return diamond_double_fan(s.n);
    if (f == "fan-star") return fan_star(s.k, s.n);
    if (f == "cut-vertex-family") return cut_vertex_family(s.q, s.attach);
    if (f == "figure3") return figure3_graph();
    if (f == "g0-prime-even") return g0_prime(Parity::even, s.n);
    if (f == "g0-prime-odd") return g0_prime(Parity::odd, s.n);
    if (f == "triple-fan-chain") return triple_fan_chain(s.q);
    if (f == "triple-fan-star") return triple_fan_star(s.q);
    throw std::invalid_argument("unknown family tag: " + f);
}

}  // namespace opspec
