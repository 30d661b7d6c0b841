#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace opspec {

enum class MinorKind { K4, K23 };

inline const char* to_string(MinorKind k) { return k == MinorKind::K4 ? "K4" : "K23"; }

/// Branch sets of a minor model. For K23 the first two sets form the side of size two.
struct MinorWitness {
    MinorKind kind = MinorKind::K4;
    std::vector<std::vector<int>> branch_sets;
};

struct OuterplanarityCertificate {
    bool outerplanar = false;
    std::vector<int> embedding;           // cyclic order; every edge is a non-crossing chord
    std::optional<MinorWitness> witness;  // present when not outerplanar
};

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_outerplanar_error : public std::invalid_argument {
public:
    not_outerplanar_error(const std::string& what, MinorWitness w) : std::invalid_argument(what), witness(std::move(w)) {}
    MinorWitness witness;
};

namespace detail {

/// Biconnected components (as vertex lists) via iterative Tarjan. Isolated vertices are not reported.
inline std::vector<std::vector<int>> blocks(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> it(n, 0);
    std::vector<Edge> estack;
    std::vector<std::vector<int>> out;
    std::vector<int> mark(n, -1);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            if (it[u] < adj[u].size()) {
                int v = adj[u][it[u]++];
                if (disc[v] == -1) {
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    estack.emplace_back(u, v);
                    stack.push_back(v);
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    low[u] = std::min(low[u], disc[v]);
                    estack.emplace_back(u, v);
                }
            } else {
                stack.pop_back();
                int p = parent[u];
                if (p < 0) continue;
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    std::vector<int> comp;
                    const int tag = static_cast<int>(out.size());
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        for (int x : {e.first, e.second})
                            if (mark[x] != tag) {
                                mark[x] = tag;
                                comp.push_back(x);
                            }
                        if (e == Edge{p, u}) break;
                    }
                    out.push_back(std::move(comp));
                }
            }
        }
    }
    return out;
}

/// Outer cycle of a 2-connected block by degree-2 reductions. Each reduction of v with neighbours a, b
/// forces ab onto the outer cycle of the reduced graph; a forced edge that is hit twice means failure.
inline std::optional<std::vector<int>> block_outer_cycle(const std::vector<int>& verts,
                                                         const std::vector<std::vector<int>>& adj,
                                                         std::vector<int>& local, bool want_cycle) {
    const int k = static_cast<int>(verts.size());
    if (k == 2) return want_cycle ? std::optional<std::vector<int>>(verts) : std::vector<int>{};
    for (int i = 0; i < k; ++i) local[verts[i]] = i;
    const int W = (k + 63) / 64;
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(k) * W, 0), forced(static_cast<std::size_t>(k) * W, 0);
    auto bit = [&](std::vector<std::uint64_t>& m, int a, int b) -> bool { return (m[a * W + (b >> 6)] >> (b & 63)) & 1u; };
    auto set = [&](std::vector<std::uint64_t>& m, int a, int b, bool on) {
        const std::uint64_t mask = std::uint64_t{1} << (b & 63);
        if (on) m[a * W + (b >> 6)] |= mask;
        else m[a * W + (b >> 6)] &= ~mask;
    };
    std::vector<int> deg(k, 0);
    long edges = 0;
    for (int i = 0; i < k; ++i)
        for (int v : adj[verts[i]]) {
            int j = local[v];
            if (j >= 0 && j < k && verts[j] == v) {
                set(nb, i, j, true);
                ++deg[i];
                ++edges;
            }
        }
    edges /= 2;
    if (edges > 2L * k - 3) return std::nullopt;
    std::vector<int> queue;
    for (int i = 0; i < k; ++i)
        if (deg[i] == 2) queue.push_back(i);
    std::vector<char> alive(k, 1);
    struct Step { int v, a, b; };
    std::vector<Step> steps;
    int count = k;
    auto two_neighbours = [&](int v) {
        int found[2] = {-1, -1}, c = 0;
        for (int w = 0; w < W && c < 2; ++w) {
            std::uint64_t b = nb[v * W + w];
            while (b && c < 2) {
                found[c++] = w * 64 + std::countr_zero(b);
                b &= b - 1;
            }
        }
        return std::pair{found[0], found[1]};
    };
    while (count > 3) {
        int v = -1;
        while (!queue.empty()) {
            int c = queue.back();
            queue.pop_back();
            if (alive[c] && deg[c] == 2) {
                v = c;
                break;
            }
        }
        if (v < 0) return std::nullopt;
        auto [a, b] = two_neighbours(v);
        alive[v] = 0;
        --count;
        set(nb, v, a, false);
        set(nb, a, v, false);
        set(nb, v, b, false);
        set(nb, b, v, false);
        if (bit(nb, a, b)) {
            if (bit(forced, a, b)) return std::nullopt;
            --deg[a];
            --deg[b];
        } else {
            set(nb, a, b, true);
            set(nb, b, a, true);
        }
        set(forced, a, b, true);
        set(forced, b, a, true);
        steps.push_back({v, a, b});
        if (deg[a] == 2) queue.push_back(a);
        if (deg[b] == 2) queue.push_back(b);
    }
    if (!want_cycle) return std::vector<int>{};
    std::vector<int> rest;
    for (int i = 0; i < k; ++i)
        if (alive[i]) rest.push_back(i);
    std::vector<int> next(k, -1);
    next[rest[0]] = rest[1];
    next[rest[1]] = rest[2];
    next[rest[2]] = rest[0];
    for (auto s = steps.rbegin(); s != steps.rend(); ++s) {
        if (next[s->a] == s->b) {
            next[s->a] = s->v;
            next[s->v] = s->b;
        } else if (next[s->b] == s->a) {
            next[s->b] = s->v;
            next[s->v] = s->a;
        } else {
            throw std::logic_error("outer cycle reconstruction lost a forced edge");
        }
    }
    std::vector<int> cycle;
    int at = rest[0];
    do {
        cycle.push_back(verts[at]);
        at = next[at];
    } while (at != rest[0]);
    return cycle;
}

/// Decision plus (optionally) a one-page ordering assembled over the block-cut tree.
inline std::optional<std::vector<int>> outer_order(const Graph& g, bool want_order) {
    const int n = g.order();
    if (n >= 2 && g.size() > 2 * n - 3) return std::nullopt;
    const auto adj = g.adjacency_lists();
    const auto bl = blocks(adj);
    std::vector<int> local(n, -1);
    std::vector<std::vector<int>> cycles;
    cycles.reserve(bl.size());
    for (const auto& b : bl) {
        auto c = block_outer_cycle(b, adj, local, want_order);
        if (!c) return std::nullopt;
        if (want_order) cycles.push_back(std::move(*c));
    }
    if (!want_order) return std::vector<int>{};
    std::vector<std::vector<int>> blocks_at(n);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (int v : cycles[i]) blocks_at[v].push_back(static_cast<int>(i));
    std::vector<char> emitted(n, 0), used(cycles.size(), 0);
    std::vector<int> order;
    order.reserve(n);
    std::function<void(int)> emit = [&](int v) {
        emitted[v] = 1;
        order.push_back(v);
        for (int bi : blocks_at[v]) {
            if (used[bi]) continue;
            used[bi] = 1;
            const auto& cyc = cycles[bi];
            auto pos = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
            for (std::size_t s = 1; s < cyc.size(); ++s) emit(cyc[(pos + s) % cyc.size()]);
        }
    };
    for (int v = 0; v < n; ++v)
        if (!emitted[v]) emit(v);
    return order;
}

/// Edge-minimal non-outerplanar subgraph; it is a subdivision of K4 or K23.
inline MinorWitness witness_from_minimal_subgraph(const Graph& g) {
    Graph h = g;
    for (auto [u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (outer_order(h, false)) h.add_edge(u, v);
    }
    std::vector<int> branch;
    for (int v = 0; v < h.order(); ++v) {
        int d = h.degree(v);
        if (d >= 3) branch.push_back(v);
        if (d > 3) throw std::logic_error("minimal non-outerplanar subgraph has a vertex of degree > 3");
    }
    std::vector<int> index(h.order(), -1);
    for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = static_cast<int>(i);
    // each branch vertex, each incident edge: walk through degree-2 vertices to the next branch vertex
    struct Thread { int from, to; std::vector<int> inner; };
    std::vector<Thread> threads;
    for (int b : branch)
        for (int first : h.neighbors(b)) {
            int prev = b, at = first;
            std::vector<int> inner;
            while (index[at] < 0) {
                inner.push_back(at);
                auto nb = h.neighbors(at);
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = at;
                at = nxt;
            }
            if (b == at) throw std::logic_error("unexpected loop thread");
            if (b < at) threads.push_back({b, at, std::move(inner)});
        }
    MinorWitness w;
    if (branch.size() == 4) {
        w.kind = MinorKind::K4;
        w.branch_sets.resize(4);
        for (int i = 0; i < 4; ++i) w.branch_sets[i].push_back(branch[i]);
        for (auto& t : threads)
            for (int x : t.inner) w.branch_sets[index[t.from]].push_back(x);
    } else if (branch.size() == 2) {
        w.kind = MinorKind::K23;
        w.branch_sets = {{branch[0]}, {branch[1]}};
        for (auto& t : threads) {
            if (t.inner.empty()) throw std::logic_error("K23 subdivision with a direct edge");
            w.branch_sets.push_back(t.inner);
        }
        if (w.branch_sets.size() != 5) throw std::logic_error("K23 subdivision without three threads");
    } else {
        throw std::logic_error("minimal non-outerplanar subgraph is neither K4 nor K23 shaped");
    }
    for (auto& s : w.branch_sets) std::sort(s.begin(), s.end());
    return w;
}

}  // namespace detail

/// Fast decision without certificates.
inline bool outerplanar(const Graph& g) { return detail::outer_order(g, false).has_value(); }

inline OuterplanarityCertificate is_outerplanar(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("is_outerplanar needs n >= 1");
    OuterplanarityCertificate c;
    if (auto order = detail::outer_order(g, true)) {
        c.outerplanar = true;
        c.embedding = std::move(*order);
    } else {
        c.witness = detail::witness_from_minimal_subgraph(g);
    }
    return c;
}

namespace detail {

inline bool connected_subset(const Graph& g, const std::vector<int>& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.order(), 0), seen(g.order(), 0);
    for (int v : set) in[v] = 1;
    std::vector<int> stack{set[0]};
    seen[set[0]] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (in[v] && !seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == set.size();
}

inline bool sets_touch(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (g.has_edge(u, v)) return true;
    return false;
}

}  // namespace detail

inline bool validate_witness(const Graph& g, const MinorWitness& w) {
    const std::size_t want = w.kind == MinorKind::K4 ? 4 : 5;
    if (w.branch_sets.size() != want) return false;
    std::vector<char> seen(g.order(), 0);
    for (const auto& s : w.branch_sets) {
        for (int v : s) {
            if (v < 0 || v >= g.order() || seen[v]) return false;
            seen[v] = 1;
        }
        if (!detail::connected_subset(g, s)) return false;
    }
    const auto& B = w.branch_sets;
    if (w.kind == MinorKind::K4) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!detail::sets_touch(g, B[i], B[j])) return false;
    } else {
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 5; ++j)
                if (!detail::sets_touch(g, B[i], B[j])) return false;
    }
    return true;
}

/// Edges must be pairwise non-crossing chords of the cyclic order.
inline bool validate_embedding(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    std::vector<Edge> chords;
    for (auto [u, v] : g.edges()) chords.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (a == c || a == d || b == c || b == d) continue;
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) return false;
        }
    return true;
}

inline bool validate_certificate(const Graph& g, const OuterplanarityCertificate& c) {
    if (c.outerplanar) return validate_embedding(g, c.embedding);
    return c.witness.has_value() && validate_witness(g, *c.witness);
}

namespace detail {

/// Up to `limit` internally vertex-disjoint u-v paths (edge uv ignored) by unit-capacity augmenting paths
/// on the split-vertex network. Returns the internal vertex sequences.
inline std::vector<std::vector<int>> disjoint_paths(const Graph& g, int s, int t, int limit) {
    const int n = g.order();
    // node 2v = v_in, 2v+1 = v_out; capacity 1 on v_in -> v_out for inner vertices
    struct Arc { int to, cap; };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(2 * n);
    auto add = [&](int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? limit : 1);
    for (auto [u, v] : g.edges()) {
        if ((u == s && v == t) || (u == t && v == s)) continue;
        add(2 * u + 1, 2 * v, 1);
        add(2 * v + 1, 2 * u, 1);
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (flow < limit) {
        std::vector<int> via(2 * n, -1);
        std::vector<int> queue{src};
        via[src] = -2;
        for (std::size_t qi = 0; qi < queue.size() && via[dst] == -1; ++qi) {
            int x = queue[qi];
            for (int ai : out[x])
                if (arcs[ai].cap > 0 && via[arcs[ai].to] == -1) {
                    via[arcs[ai].to] = ai;
                    queue.push_back(arcs[ai].to);
                }
        }
        if (via[dst] == -1) break;
        for (int x = dst; x != src;) {
            int ai = via[x];
            arcs[ai].cap -= 1;
            arcs[ai ^ 1].cap += 1;
            x = arcs[ai ^ 1].to;
        }
        ++flow;
    }
    std::vector<std::vector<int>> paths;
    // decompose: follow saturated out->in arcs from s
    for (int ai : out[src]) {
        if (ai % 2 != 0 || arcs[ai].cap != 0) continue;
        std::vector<int> inner;
        int node = arcs[ai].to;  // some v_in
        while (node != dst) {
            int v = node / 2;
            inner.push_back(v);
            int nxt = -1;
            for (int bj : out[2 * v + 1])
                if (bj % 2 == 0 && arcs[bj].cap == 0 && arcs[bj].to != 2 * v) {
                    nxt = arcs[bj].to;
                    arcs[bj].cap = -1;  // consume
                    break;
                }
            if (nxt < 0) throw std::logic_error("flow decomposition failed");
            node = nxt;
        }
        paths.push_back(std::move(inner));
    }
    return paths;
}

struct K4Search {
    const Graph& g;
    std::vector<std::uint32_t> nb;
    long budget;
    long steps = 0;
    int br[4];
    std::uint32_t used = 0;
    std::vector<std::vector<int>> found;  // six threads' inner vertices

    static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    bool reachable(int a, int b, std::uint32_t blocked) const {
        std::uint32_t seen = 1u << a, frontier = 1u << a;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) {
                int x = std::countr_zero(f);
                if (nb[x] >> b & 1u) return true;
                next |= nb[x];
            }
            next &= ~seen & ~blocked;
            seen |= next;
            frontier = next;
        }
        return false;
    }

    bool feasible(int from) const {
        for (int p = from; p < 6; ++p) {
            int a = br[pairs[p][0]], b = br[pairs[p][1]];
            std::uint32_t branches = 0;
            for (int x : br) branches |= 1u << x;
            if (!reachable(a, b, used | branches)) return false;
        }
        return true;
    }

    bool extend(int p, int at, int target, std::vector<int>& path, std::uint32_t branches) {
        if (++steps > budget) throw resource_error("find_minor: search budget exceeded");
        if (nb[at] >> target & 1u) {
            std::uint32_t saved = used;
            for (int x : path) used |= 1u << x;
            found.push_back(path);
            if (pair_search(p + 1)) return true;
            found.pop_back();
            used = saved;
        }
        for (std::uint32_t c = nb[at] & ~used & ~branches; c; c &= c - 1) {
            int x = std::countr_zero(c);
            bool on_path = false;
            for (int y : path) on_path |= (y == x);
            if (on_path) continue;
            path.push_back(x);
            used |= 1u << x;
            bool ok = extend(p, x, target, path, branches);
            used &= ~(1u << x);
            path.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool pair_search(int p) {
        if (p == 6) return true;
        if (!feasible(p)) return false;
        std::uint32_t branches = 0;
        for (int x : br) branches |= 1u << x;
        std::vector<int> path;
        return extend(p, br[pairs[p][0]], br[pairs[p][1]], path, branches);
    }
};

}  // namespace detail

/// Independent minor oracle for n <= 24. K23 (and K4) have maximum degree 3, so a minor exists iff a
/// subdivision does. K23: a pair with three internally disjoint paths avoiding their common edge.
/// K4: four branch vertices with six internally disjoint threads, by backtracking.
inline std::optional<MinorWitness> find_minor(const Graph& g, MinorKind h, long budget = 50'000'000) {
    const int n = g.order();
    if (n > 24) throw resource_error("find_minor: n exceeds the exhaustive search limit of 24");
    if (h == MinorKind::K23) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.degree(a) < 3 || g.degree(b) < 3) continue;
                auto paths = detail::disjoint_paths(g, a, b, 3);
                if (paths.size() == 3) {
                    MinorWitness w{MinorKind::K23, {{a}, {b}}};
                    for (auto& p : paths) {
                        std::sort(p.begin(), p.end());
                        w.branch_sets.push_back(p);
                    }
                    return w;
                }
            }
        return std::nullopt;
    }
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    if (cand.size() < 4) return std::nullopt;
    // pairs of branch vertices need three internally disjoint connections
    std::vector<std::vector<char>> strong(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            int a = cand[i], b = cand[j];
            int k = static_cast<int>(detail::disjoint_paths(g, a, b, 3).size()) + (g.has_edge(a, b) ? 1 : 0);
            strong[a][b] = strong[b][a] = k >= 3;
        }
    detail::K4Search s{g, std::vector<std::uint32_t>(n, 0), budget};
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) s.nb[v] |= 1u << w;
    const std::size_t c = cand.size();
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            if (!strong[cand[i]][cand[j]]) continue;
            for (std::size_t k = j + 1; k < c; ++k) {
                if (!strong[cand[i]][cand[k]] || !strong[cand[j]][cand[k]]) continue;
                for (std::size_t l = k + 1; l < c; ++l) {
                    if (!strong[cand[i]][cand[l]] || !strong[cand[j]][cand[l]] || !strong[cand[k]][cand[l]])
                        continue;
                    s.br[0] = cand[i];
                    s.br[1] = cand[j];
                    s.br[2] = cand[k];
                    s.br[3] = cand[l];
                    s.used = 0;
                    s.found.clear();
                    if (s.pair_search(0)) {
                        MinorWitness w{MinorKind::K4, {}};
                        for (int b : s.br) w.branch_sets.push_back({b});
                        for (int p = 0; p < 6; ++p)
                            for (int x : s.found[p]) w.branch_sets[detail::K4Search::pairs[p][0]].push_back(x);
                        for (auto& bs : w.branch_sets) std::sort(bs.begin(), bs.end());
                        return w;
                    }
                }
            }
        }
    return std::nullopt;
}

/// Outerplanar iff neither K4 nor K23 is a minor, decided by the oracle above.
inline bool outerplanar_by_minors(const Graph& g) {
    return !find_minor(g, MinorKind::K23) && !find_minor(g, MinorKind::K4);
}

}  // namespace opspec
