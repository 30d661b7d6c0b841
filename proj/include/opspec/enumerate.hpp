#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "graph.hpp"
#include "outerplanarity.hpp"
#include "parallel.hpp"

namespace opspec {

// Exhaustive generation by vertex augmentation. Every graph of the class on n+1 vertices arises from one
// on n vertices by adding a vertex w that is minimal under an isomorphism-invariant key among the
// removable vertices; children whose new vertex is not minimal are skipped, the rest are merged through
// a collector keyed by canonical form.
//
// Removable vertices: any vertex (all graphs), non-cut vertices (connected graphs), degree <= 2
// (outerplanar graphs always have one; in a connected outerplanar graph a leaf block supplies a non-cut one).

inline constexpr int kMaxOuterplanarEnumeration = 11;
inline constexpr int kMaxLargeOuterplanarEnumeration = 12;
inline constexpr int kMaxGeneralEnumeration = 9;

struct EnumerationOptions {
    bool connected_only = true;
    bool outerplanar_only = true;   // false enumerates all graphs
    int threads = 1;
    std::int64_t max_candidates = 0;  // cap on final-level candidates, 0 = none
    std::int64_t resume_from = 0;     // first final-level parent index to process
    bool allow_large = false;         // permits n = 12 for outerplanar graphs
};

struct EnumerationResult {
    int n = 0;
    std::vector<Graph> graphs;  // canonical representatives sorted by graph6
    std::int64_t parents = 0;
    std::int64_t candidates = 0;  // children passing the minimality filter at the final level
    bool complete = true;
    std::string resume_token;  // JSON {n, connected, outerplanar, parent_index} when incomplete
};

class enumeration_incomplete : public resource_error {
public:
    enumeration_incomplete(const std::string& what, EnumerationResult partial)
        : resource_error(what), partial(std::move(partial)) {}
    EnumerationResult partial;
};

namespace detail {

inline std::uint64_t reach(const std::vector<std::uint64_t>& rows, std::uint64_t allowed, int start) {
    std::uint64_t seen = std::uint64_t{1} << start, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1) next |= rows[std::countr_zero(b)];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_cut_vertex(const std::vector<std::uint64_t>& rows, int n, int w) {
    if (n <= 2) return false;
    const std::uint64_t all = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << w);
    const int start = std::countr_zero(all);
    return reach(rows, all, start) != all;
}

/// Whether the last vertex is minimal under (degree, neighbour degree sum) among removable vertices.
inline bool last_vertex_minimal(const std::vector<std::uint64_t>& rows, int n, const EnumerationOptions& o) {
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = std::popcount(rows[u]);
    auto key = [&](int u) {
        int s = 0;
        for (std::uint64_t b = rows[u]; b; b &= b - 1) s += deg[std::countr_zero(b)];
        return std::pair{deg[u], s};
    };
    const int v = n - 1;
    const auto kv = key(v);
    for (int w = 0; w < v; ++w) {
        if (o.outerplanar_only && deg[w] > 2) continue;
        if (key(w) >= kv) continue;
        if (o.connected_only && is_cut_vertex(rows, n, w)) continue;
        return false;
    }
    return true;
}

inline std::string rows_key(const std::vector<std::uint64_t>& rows) {
    return std::string(reinterpret_cast<const char*>(rows.data()), rows.size() * sizeof(std::uint64_t));
}

/// Calls emit(child) for every accepted one-vertex extension of parent.
template <class Emit>
void extend(const Graph& parent, const EnumerationOptions& o, Emit&& emit) {
    const int k = parent.order();
    const int n = k + 1;
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0; u < k; ++u) rows[u] = parent.row(u)[0];
    const int edges = parent.size();
    auto try_set = [&](std::uint64_t S) {
        const int s = std::popcount(S);
        if (o.connected_only && s == 0 && n > 1) return;
        if (o.outerplanar_only && edges + s > std::max(2 * n - 3, n - 1)) return;
        for (std::uint64_t b = S; b; b &= b - 1) rows[std::countr_zero(b)] |= std::uint64_t{1} << k;
        rows[k] = S;
        if (last_vertex_minimal(rows, n, o)) {
            Graph child(n);
            for (int u = 0; u < n; ++u)
                for (std::uint64_t b = rows[u] & ((std::uint64_t{1} << u) - 1); b; b &= b - 1)
                    child.add_edge(u, std::countr_zero(b));
            if (!o.outerplanar_only || s < 2 || outerplanar(child)) emit(child);
        }
        for (std::uint64_t b = S; b; b &= b - 1) rows[std::countr_zero(b)] &= ~(std::uint64_t{1} << k);
    };
    if (o.outerplanar_only) {
        try_set(0);
        for (int a = 0; a < k; ++a) {
            try_set(std::uint64_t{1} << a);
            for (int b = a + 1; b < k; ++b) try_set((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        }
    } else {
        for (std::uint64_t S = 0; S < (std::uint64_t{1} << k); ++S) try_set(S);
    }
}

inline void check_enumeration_size(int n, const EnumerationOptions& o) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    const int cap = o.outerplanar_only ? (o.allow_large ? kMaxLargeOuterplanarEnumeration : kMaxOuterplanarEnumeration)
                                       : kMaxGeneralEnumeration;
    if (n > cap)
        throw resource_error("exhaustive enumeration is capped at n = " + std::to_string(cap) +
                             (o.outerplanar_only && !o.allow_large ? " (n = 12 needs the large budget)" : ""));
}

/// Canonical-key collector over the children of parents[begin, end).
inline std::map<std::string, Graph> children_of(const std::vector<Graph>& parents, std::size_t begin, std::size_t end,
                                                const EnumerationOptions& o, std::atomic<std::int64_t>& candidates) {
    std::map<std::string, Graph> merged;
    const int threads = std::max(1, o.threads);
    std::vector<std::unordered_map<std::string, Graph>> local(threads);
    parallel_for(end - begin, threads, [&](std::size_t i, int w) {
        extend(parents[begin + i], o, [&](const Graph& child) {
            ++candidates;
            auto c = canonical_form(child);
            auto key = rows_key(c.rows);
            if (!local[w].count(key)) local[w].emplace(std::move(key), c.graph());
        });
    });
    for (auto& l : local)
        for (auto& [k, g] : l) merged.emplace(k, std::move(g));
    return merged;
}

}  // namespace detail

/// Canonical representatives of all graphs of the selected class on n vertices, built level by level.
inline std::vector<Graph> enumerate_level(int n, const EnumerationOptions& o) {
    detail::check_enumeration_size(n, o);
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::atomic<std::int64_t> candidates{0};
        auto merged = detail::children_of(level, 0, level.size(), o, candidates);
        level.clear();
        for (auto& [key, g] : merged) level.push_back(std::move(g));
    }
    return level;
}

inline EnumerationResult enumerate_graphs(int n, const EnumerationOptions& o) {
    detail::check_enumeration_size(n, o);
    EnumerationResult r;
    r.n = n;
    if (n == 1) {
        r.graphs.push_back(Graph(1));
        return r;
    }
    const auto parents = enumerate_level(n - 1, o);
    r.parents = static_cast<std::int64_t>(parents.size());
    std::map<std::string, Graph> merged;
    std::atomic<std::int64_t> candidates{0};
    const std::size_t block = 256 * static_cast<std::size_t>(std::max(1, o.threads));
    std::size_t at = static_cast<std::size_t>(std::max<std::int64_t>(0, o.resume_from));
    while (at < parents.size()) {
        if (o.max_candidates > 0 && candidates >= o.max_candidates) {
            r.complete = false;
            r.resume_token = nlohmann::json{{"n", n},
                                            {"connected", o.connected_only},
                                            {"outerplanar", o.outerplanar_only},
                                            {"parent_index", at}}
                                 .dump();
            break;
        }
        const std::size_t end = std::min(parents.size(), at + block);
        for (auto& [k, g] : detail::children_of(parents, at, end, o, candidates)) merged.emplace(k, std::move(g));
        at = end;
    }
    r.candidates = candidates;
    for (auto& [k, g] : merged) r.graphs.push_back(std::move(g));
    std::sort(r.graphs.begin(), r.graphs.end(),
              [](const Graph& a, const Graph& b) { return graph6_encode(a) < graph6_encode(b); });
    if (!r.complete)
        throw enumeration_incomplete("candidate cap reached; resume with the returned token", std::move(r));
    return r;
}

/// Parent index stored in a resume token.
inline std::int64_t resume_index(const std::string& token) {
    return nlohmann::json::parse(token).at("parent_index").get<std::int64_t>();
}

/// One representative per isomorphism class of (connected) outerplanar graphs on n vertices.
inline std::vector<Graph> enumerate_outerplanar(int n, bool connected_only, int threads = 1, bool allow_large = false) {
    EnumerationOptions o;
    o.connected_only = connected_only;
    o.threads = threads;
    o.allow_large = allow_large;
    return enumerate_graphs(n, o).graphs;
}

/// Streams every accepted (not deduplicated) n-vertex child of the (n-1)-vertex representatives,
/// starting at parent index `from`. on_parent(index) runs after each parent in index order (single thread).
template <class Visit, class OnParent>
void for_each_candidate(int n, const EnumerationOptions& o, std::int64_t from, Visit&& visit, OnParent&& on_parent) {
    detail::check_enumeration_size(n, o);
    const auto parents = enumerate_level(n - 1, o);
    for (std::size_t i = static_cast<std::size_t>(std::max<std::int64_t>(0, from)); i < parents.size(); ++i) {
        detail::extend(parents[i], o, visit);
        on_parent(static_cast<std::int64_t>(i), static_cast<std::int64_t>(parents.size()));
    }
}

// ---- independent oracle: labeled generation + permutation canonical form ----

/// Minimum upper-triangle bit string over all vertex orders compatible with the degree order (n <= 11).
inline std::uint64_t permutation_canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("permutation canonical code needs n <= 11");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<std::pair<int, int>> classes;  // [begin, end) in `order`
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
        classes.push_back({i, j});
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == classes.size()) {
            std::uint64_t code = 0;
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (g.has_edge(order[i], order[j])) code |= std::uint64_t{1} << bit;
            best = std::min(best, code);
            return;
        }
        auto [b, e] = classes[c];
        std::sort(order.begin() + b, order.begin() + e);
        do rec(c + 1);
        while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(0);
    return best;
}

/// Number of isomorphism classes by brute force over all labeled graphs (n <= 7), using the minor oracle.
inline std::int64_t count_by_labeled_generation(int n, bool connected_only, bool outerplanar_only = true) {
    if (n < 1 || n > 7) throw std::invalid_argument("labeled generation needs 1 <= n <= 7");
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.push_back({i, j});
    std::vector<std::uint64_t> codes;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (outerplanar_only && n >= 2 && std::popcount(mask) > 2 * n - 3) continue;
        Graph g(n);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) g.add_edge(slots[s].first, slots[s].second);
        if (connected_only && !g.connected()) continue;
        if (outerplanar_only && !outerplanar_by_minors(g)) continue;
        codes.push_back(permutation_canonical_code(g));
    }
    std::sort(codes.begin(), codes.end());
    return std::unique(codes.begin(), codes.end()) - codes.begin();
}

}  // namespace opspec
