#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opspec {

using Edge = std::pair<int, int>;

/// Simple undirected graph stored as bitset rows. Labels are 0..n-1.
class Graph {
public:
    static constexpr int kMaxOrder = 4096;

    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph order out of range");
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    int size() const {
        std::size_t twice = 0;
        for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return static_cast<int>(twice / 2);
    }
    int words() const { return words_; }
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        mut_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
        mut_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    }
    void remove_edge(int u, int v) {
        mut_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        mut_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    }

    int degree(int u) const {
        int d = 0;
        const auto* r = row(u);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
        return d;
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        const auto* r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t b = r[w];
            while (b) {
                out.push_back(w * 64 + std::countr_zero(b));
                b &= b - 1;
            }
        }
        return out;
    }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> adj(n_);
        for (int u = 0; u < n_; ++u) adj[u] = neighbors(u);
        return adj;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Induced subgraph on `keep`; vertex keep[i] becomes i.
    Graph induced(const std::vector<int>& keep) const {
        Graph h(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        return h;
    }

    /// Deletes `drop`; survivors keep their relative order.
    Graph without(const std::vector<int>& drop) const { return induced(complement_of(drop)); }

    std::vector<int> complement_of(const std::vector<int>& drop) const {
        std::vector<char> gone(n_, 0);
        for (int v : drop) gone[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < n_; ++v)
            if (!gone[v]) keep.push_back(v);
        return keep;
    }

    /// perm[old] = new.
    Graph relabel(const std::vector<int>& perm) const {
        Graph h(n_);
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    Graph disjoint_union(const Graph& other) const {
        Graph h(n_ + other.n_);
        for (auto [u, v] : edges()) h.add_edge(u, v);
        for (auto [u, v] : other.edges()) h.add_edge(n_ + u, n_ + v);
        return h;
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == n_;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
    std::uint64_t* mut_row(int u) { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class graph6_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// graph6: size header, then the upper triangle column by column in 6-bit groups offset by 63.
inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    auto value = [&](std::size_t i) {
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw graph6_error("graph6: byte outside printable range");
        return c - 63;
    };
    if (text.empty()) throw graph6_error("graph6: empty input");
    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw graph6_error("graph6: malformed header");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw graph6_error("graph6: malformed header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
        pos = 8;
    }
    if (n > Graph::kMaxOrder) throw graph6_error("graph6: order exceeds supported maximum");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) throw graph6_error("graph6: length mismatch");
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = value(pos + bytes - 1);
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw graph6_error("graph6: nonzero trailing bits");
    }
    return g;
}

}  // namespace opspec
