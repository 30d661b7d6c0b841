#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace opspec {

/// Canonical labeling by colour refinement plus individualisation search with automorphism pruning.
/// Limited to n <= 64 (one machine word per adjacency row).
struct CanonicalForm {
    std::vector<int> position;           // position[v] = canonical index of v
    std::vector<std::uint64_t> rows;     // adjacency rows of the relabeled graph
    std::vector<int> colors;             // colour of canonical vertex i
    std::vector<std::vector<int>> automorphisms;  // generators found during the search

    Graph graph() const {
        const int n = static_cast<int>(rows.size());
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (std::uint64_t b = rows[i]; b; b &= b - 1) {
                int j = std::countr_zero(b);
                if (i < j) g.add_edge(i, j);
            }
        return g;
    }

    /// graph6 of the canonical graph; colours appended when not all zero.
    std::string key() const {
        std::string k = graph6_encode(graph());
        if (std::any_of(colors.begin(), colors.end(), [](int c) { return c != 0; })) {
            k += ':';
            for (int c : colors) k += std::to_string(c) + ',';
        }
        return k;
    }
};

namespace detail {

class Canonizer {
public:
    Canonizer(const Graph& g, const std::vector<int>& colors) : n_(g.order()) {
        if (n_ > 64) throw std::invalid_argument("canonical labeling supports n <= 64");
        adj_.assign(n_, 0);
        for (int u = 0; u < n_; ++u) adj_[u] = n_ ? g.row(u)[0] : 0;
        colors_ = colors.empty() ? std::vector<int>(n_, 0) : colors;
        if (static_cast<int>(colors_.size()) != n_) throw std::invalid_argument("colour vector length differs from n");
    }

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) return out;
        std::vector<int> palette = colors_;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        std::vector<std::uint64_t> cells(palette.size(), 0);
        for (int v = 0; v < n_; ++v) {
            auto idx = std::lower_bound(palette.begin(), palette.end(), colors_[v]) - palette.begin();
            cells[idx] |= std::uint64_t{1} << v;
        }
        refine(cells);
        std::vector<int> prefix;
        search(cells, prefix);
        out.position = best_perm_;
        out.rows = best_cert_;
        out.colors.assign(n_, 0);
        for (int v = 0; v < n_; ++v) out.colors[best_perm_[v]] = colors_[v];
        out.automorphisms = autos_;
        return out;
    }

private:
    void refine(std::vector<std::uint64_t>& cells) const {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (std::popcount(cells[c]) < 2) continue;
                keyed.clear();
                for (std::uint64_t b = cells[c]; b; b &= b - 1) {
                    int v = std::countr_zero(b);
                    std::vector<int> key(cells.size());
                    for (std::size_t j = 0; j < cells.size(); ++j) key[j] = std::popcount(adj_[v] & cells[j]);
                    keyed.emplace_back(std::move(key), v);
                }
                bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                           [&](const auto& k) { return k.first == keyed.front().first; });
                if (uniform) continue;
                std::sort(keyed.begin(), keyed.end());
                std::vector<std::uint64_t> split;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) split.push_back(0);
                    split.back() |= std::uint64_t{1} << keyed[i].second;
                }
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                changed = true;
                break;
            }
        }
    }

    std::vector<std::uint64_t> certificate(const std::vector<int>& perm) const {
        std::vector<std::uint64_t> cert(n_, 0);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t r = 0;
            for (std::uint64_t b = adj_[v]; b; b &= b - 1) r |= std::uint64_t{1} << perm[std::countr_zero(b)];
            cert[perm[v]] = r;
        }
        return cert;
    }

    void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
        // maps v -> a^{-1}(b(v))
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[a[v]] = v;
        std::vector<int> gamma(n_);
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inv[b[v]];
            identity &= gamma[v] == v;
        }
        if (!identity) autos_.push_back(std::move(gamma));
    }

    void leaf(const std::vector<std::uint64_t>& cells) {
        std::vector<int> perm(n_);
        for (std::size_t i = 0; i < cells.size(); ++i) perm[std::countr_zero(cells[i])] = static_cast<int>(i);
        auto cert = certificate(perm);
        if (first_perm_.empty()) {
            first_perm_ = perm;
            first_cert_ = cert;
            best_perm_ = perm;
            best_cert_ = cert;
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(first_perm_, perm);
            return;
        }
        if (cert == best_cert_) {
            record_automorphism(best_perm_, perm);
            return;
        }
        if (cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_perm_ = std::move(perm);
        }
    }

    /// Orbit representative of v under stored automorphisms fixing `prefix` pointwise.
    bool same_orbit(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int p : prefix)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) parent[find(x)] = find(a[x]);
        }
        for (int t : tried)
            if (find(t) == find(v)) return true;
        return false;
    }

    void search(const std::vector<std::uint64_t>& cells, std::vector<int>& prefix) {
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (std::popcount(cells[c]) > 1) {
                target = c;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (std::uint64_t b = cells[target]; b; b &= b - 1) {
            int v = std::countr_zero(b);
            if (!tried.empty() && same_orbit(v, tried, prefix)) continue;
            tried.push_back(v);
            std::vector<std::uint64_t> next;
            next.reserve(cells.size() + 1);
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<long>(target));
            next.push_back(std::uint64_t{1} << v);
            next.push_back(cells[target] & ~(std::uint64_t{1} << v));
            next.insert(next.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
            refine(next);
            prefix.push_back(v);
            search(next, prefix);
            prefix.pop_back();
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> colors_;
    std::vector<int> first_perm_, best_perm_;
    std::vector<std::uint64_t> first_cert_, best_cert_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {}) {
    return detail::Canonizer(g, colors).run();
}

inline std::string canonical_key(const Graph& g) { return canonical_form(g).key(); }

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

/// Whether some automorphism maps u to v (decided by comparing two singly-coloured canonical forms).
inline bool automorphic(const Graph& g, int u, int v) {
    if (u == v) return true;
    std::vector<int> cu(g.order(), 0), cv(g.order(), 0);
    cu[u] = 1;
    cv[v] = 1;
    return canonical_form(g, cu).rows == canonical_form(g, cv).rows;
}

}  // namespace opspec
