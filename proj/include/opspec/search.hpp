#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "constructions.hpp"
#include "eigen.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "outerplanarity.hpp"
#include "parallel.hpp"

namespace opspec {

inline constexpr double kTieTolerance = 1e-10;

struct SearchOptions {
    int threads = 1;
    double tie_tolerance = kTieTolerance;
    bool allow_large = false;         // exhaustive n = 12
    std::string checkpoint;           // NDJSON checkpoint file for the n = 12 exhaustive run
    std::int64_t checkpoint_every = 2000;  // parents between checkpoint lines
    bool resume = false;              // continue from the last checkpoint line
    bool two_connected_only = false;  // structured families: keep 2-connected members only
    int balance_slack = -1;           // max |a - b| of hub path lengths; -1 = automatic
};

struct SearchResult {
    int n = 0, k = 0;
    std::string family;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::string> argmax;   // canonical graph6, sorted
    std::string best_description;      // structured families: parameters of the first maximizer
    double runner_up = std::numeric_limits<double>::quiet_NaN();
    double gap = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> residuals;     // eigen residual per argmax graph (NaN if lambda_k is not simple)
    std::int64_t candidates = 0;       // graphs evaluated
    Graph best_graph;
};

/// Canonical graph6 for n <= 64, plain graph6 otherwise.
inline std::string class_key(const Graph& g) { return g.order() <= 64 ? canonical_key(g) : graph6_encode(g); }

inline std::string class_graph6(const Graph& g) {
    return g.order() <= 64 ? graph6_encode(canonical_graph(g)) : graph6_encode(g);
}

/// Tracks the maximum value, its tie set (deduplicated by isomorphism class) and the best value below it.
class ArgmaxTracker {
public:
    explicit ArgmaxTracker(double tol = kTieTolerance) : tol_(tol) {}

    void offer(const Graph& g, double value, const std::string& description = {}) {
        ++count_;
        if (value > best_ + tol_) {
            for (auto& t : ties_) runner_ = std::max(runner_, t.value);
            ties_.clear();
            keys_.clear();
            best_ = value;
            add_tie(g, value, description);
        } else if (value >= best_ - tol_) {
            best_ = std::max(best_, value);
            add_tie(g, value, description);
        } else {
            runner_ = std::max(runner_, value);
        }
    }

    SearchResult result(int n, int k, const std::string& family) const {
        SearchResult r;
        r.n = n;
        r.k = k;
        r.family = family;
        r.candidates = count_;
        if (ties_.empty()) return r;
        r.best = best_;
        double runner = runner_;
        std::set<std::string> seen;
        for (const auto& t : ties_) {
            if (t.value < best_ - tol_) {
                runner = std::max(runner, t.value);
                continue;
            }
            seen.insert(class_graph6(t.graph));
        }
        r.argmax.assign(seen.begin(), seen.end());
        // first maximizer in offer order supplies the witness graph and description
        for (const auto& t : ties_)
            if (t.value >= best_ - tol_) {
                r.best_graph = t.graph;
                r.best_description = t.description;
                break;
            }
        if (runner > -std::numeric_limits<double>::infinity()) {
            r.runner_up = runner;
            r.gap = best_ - runner;
        }
        return r;
    }

    double best() const { return best_; }
    double runner_up() const { return runner_; }
    std::int64_t count() const { return count_; }
    std::vector<Graph> tie_graphs() const {
        std::vector<Graph> out;
        for (const auto& t : ties_) out.push_back(t.graph);
        return out;
    }
    void restore(double best, double runner, const std::vector<Graph>& ties, std::int64_t count) {
        best_ = best;
        runner_ = runner;
        ties_.clear();
        keys_.clear();
        for (const auto& g : ties) add_tie(g, best, {});
        count_ = count;
    }

private:
    struct Tie {
        Graph graph;
        double value;
        std::string description;
    };

    void add_tie(const Graph& g, double value, const std::string& description) {
        if (ties_.size() >= 4096) return;
        auto key = class_key(g);
        if (!keys_.insert(key).second) return;
        ties_.push_back({g, value, description});
    }

    double tol_;
    double best_ = -std::numeric_limits<double>::infinity();
    double runner_ = -std::numeric_limits<double>::infinity();
    std::vector<Tie> ties_;
    std::set<std::string> keys_;
    std::int64_t count_ = 0;
};

namespace detail {

inline void finish_result(SearchResult& r) {
    for (const auto& s : r.argmax) {
        try {
            r.residuals.push_back(eigenpair(graph6_decode(s), r.k).residual);
        } catch (const multiplicity_error&) {
            r.residuals.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
}

inline bool biconnected(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !g.connected()) return false;
    for (int v = 0; v < n; ++v)
        if (!g.without({v}).connected()) return false;
    return true;
}

/// Fan blocks of the given sizes at consecutive offsets; returns the offsets.
inline std::vector<int> place_fans(Graph& g, const std::vector<int>& sizes) {
    std::vector<int> offsets;
    int at = 0;
    for (int s : sizes) {
        add_fan(g, at, s);
        offsets.push_back(at);
        at += s;
    }
    return offsets;
}

inline int fan_side_vertex(int offset, int size, FanSide s) {
    return s == FanSide::hub ? offset : s == FanSide::first_end ? offset + 1 : offset + size - 1;
}

}  // namespace detail

// ---- exhaustive ----

struct ExhaustiveCheckpoint {
    int n = 0, k = 0;
    std::int64_t parent_index = -1;  // last parent fully processed
    double best = 0, runner_up = 0;
    std::string best_graph6;
    std::vector<std::string> ties;
    std::int64_t candidates = 0;
};

inline nlohmann::json to_json(const ExhaustiveCheckpoint& c) {
    return {{"n", c.n},       {"k", c.k},
            {"parent_index", c.parent_index}, {"best", c.best},
            {"runner_up", c.runner_up},       {"best_graph6", c.best_graph6},
            {"ties", c.ties}, {"candidates", c.candidates}};
}

inline std::optional<ExhaustiveCheckpoint> read_last_checkpoint(const std::string& path) {
    std::ifstream in(path);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    if (last.empty()) return std::nullopt;
    auto j = nlohmann::json::parse(last);
    ExhaustiveCheckpoint c;
    c.n = j.at("n");
    c.k = j.at("k");
    c.parent_index = j.at("parent_index");
    c.best = j.at("best");
    c.runner_up = j.at("runner_up");
    c.best_graph6 = j.at("best_graph6");
    c.ties = j.at("ties").get<std::vector<std::string>>();
    c.candidates = j.at("candidates");
    return c;
}

/// lambda_k over every connected outerplanar graph on n vertices. n = 12 streams candidates from the
/// n = 11 classes without deduplication and needs allow_large; ties are deduplicated at the end.
inline SearchResult exhaustive_search(int n, int k, const SearchOptions& opt = {}) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    EnumerationOptions eo;
    eo.threads = opt.threads;
    eo.allow_large = opt.allow_large;
    ArgmaxTracker tracker(opt.tie_tolerance);
    if (n <= kMaxOuterplanarEnumeration) {
        const auto graphs = enumerate_outerplanar(n, true, opt.threads);
        std::vector<double> values(graphs.size());
        parallel_for(graphs.size(), opt.threads, [&](std::size_t i, int) { values[i] = lambda(graphs[i], k); });
        for (std::size_t i = 0; i < graphs.size(); ++i) tracker.offer(graphs[i], values[i]);
        auto r = tracker.result(n, k, "exhaustive");
        detail::finish_result(r);
        return r;
    }
    detail::check_enumeration_size(n, eo);
    std::int64_t from = 0;
    if (opt.resume && !opt.checkpoint.empty()) {
        if (auto c = read_last_checkpoint(opt.checkpoint)) {
            if (c->n != n || c->k != k) throw std::invalid_argument("checkpoint belongs to a different (n, k)");
            std::vector<Graph> ties;
            for (const auto& s : c->ties) ties.push_back(graph6_decode(s));
            tracker.restore(c->best, c->runner_up, ties, c->candidates);
            from = c->parent_index + 1;
        }
    }
    std::ofstream log;
    if (!opt.checkpoint.empty()) log.open(opt.checkpoint, std::ios::app);
    for_each_candidate(
        n, eo, from, [&](const Graph& g) { tracker.offer(g, lambda(g, k)); },
        [&](std::int64_t index, std::int64_t total) {
            if (!log.is_open() || ((index + 1) % opt.checkpoint_every != 0 && index + 1 != total)) return;
            ExhaustiveCheckpoint c{n, k, index, tracker.best(), tracker.runner_up(), {}, {}, tracker.count()};
            for (const auto& g : tracker.tie_graphs()) c.ties.push_back(graph6_encode(g));
            if (!c.ties.empty()) c.best_graph6 = c.ties.front();
            log << to_json(c).dump() << '\n' << std::flush;
        });
    auto r = tracker.result(n, k, "exhaustive");
    detail::finish_result(r);
    return r;
}

// ---- structured two-hub family ----

/// Calls visit(graph, description) for every member of the two-hub family on n vertices:
/// hubs h1, h2 joined to full paths S1 (a vertices) and S2 (b vertices), a >= b >= 1;
/// 0-2 shared vertices adjacent to both hubs and optionally to an end of S1 and of S2;
/// or one extra vertex joined to 1-2 vertices of {h_i} + window_i on each side;
/// up to 3 cross edges between the end windows (first two and last two vertices) of S1 and S2,
/// at most one when shared or extra vertices are present. Only outerplanar members are visited.
template <class Visit>
void for_each_two_hub_member(int n, const SearchOptions& opt, Visit&& visit) {
    if (n < 5) throw std::invalid_argument("two-hub family needs n >= 5");
    const int slack = opt.balance_slack >= 0 ? opt.balance_slack : (n >= 40 ? 3 : n);
    for (int shared = 0; shared <= 2; ++shared)
        for (int extra = 0; extra <= (shared == 0 ? 1 : 0); ++extra) {
            const int t = n - 2 - shared - extra;
            for (int a = (t + 1) / 2; a <= t - 1; ++a) {
                const int b = t - a;
                if (b < 1 || a - b > slack) continue;
                const int h1 = 0, h2 = a + 1, s1 = 1, s2 = a + 2;
                auto window = [](int start, int len) {
                    std::vector<int> w;
                    for (int i : {0, 1, len - 2, len - 1})
                        if (i >= 0 && i < len && std::find(w.begin(), w.end(), start + i) == w.end()) w.push_back(start + i);
                    return w;
                };
                const auto W1 = window(s1, a), W2 = window(s2, b);
                std::vector<Edge> cross_pool;
                for (int x : W1)
                    for (int y : W2) cross_pool.push_back({x, y});
                const int max_cross = (shared > 0 || extra > 0) ? 1 : 3;
                const int min_cross = (shared == 0 && extra == 0) ? 1 : 0;
                std::vector<std::vector<Edge>> cross_sets;
                std::vector<Edge> cur;
                std::function<void(std::size_t)> pick = [&](std::size_t from) {
                    if (static_cast<int>(cur.size()) >= min_cross) cross_sets.push_back(cur);
                    if (static_cast<int>(cur.size()) == max_cross) return;
                    for (std::size_t i = from; i < cross_pool.size(); ++i) {
                        cur.push_back(cross_pool[i]);
                        pick(i + 1);
                        cur.pop_back();
                    }
                };
                pick(0);

                Graph base(n);
                for (int i = 0; i < a; ++i) {
                    base.add_edge(h1, s1 + i);
                    if (i + 1 < a) base.add_edge(s1 + i, s1 + i + 1);
                }
                for (int i = 0; i < b; ++i) {
                    base.add_edge(h2, s2 + i);
                    if (i + 1 < b) base.add_edge(s2 + i, s2 + i + 1);
                }
                const int first_free = a + b + 2;
                // attachment variants for shared / extra vertices
                std::vector<std::pair<std::vector<Edge>, std::string>> variants;
                if (shared == 0 && extra == 0) {
                    variants.push_back({{}, ""});
                } else if (shared > 0) {
                    const int ends1[] = {-1, s1, s1 + a - 1}, ends2[] = {-1, s2, s2 + b - 1};
                    std::vector<std::pair<int, int>> options;
                    for (int e1 : ends1)
                        for (int e2 : ends2) options.push_back({e1, e2});
                    auto attach = [&](int x, std::pair<int, int> e, std::vector<Edge>& es, std::string& d) {
                        es.push_back({x, h1});
                        es.push_back({x, h2});
                        if (e.first >= 0) es.push_back({x, e.first});
                        if (e.second >= 0) es.push_back({x, e.second});
                        d += " [" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
                    };
                    for (std::size_t i = 0; i < options.size(); ++i)
                        for (std::size_t j = i; j < (shared == 2 ? options.size() : i + 1); ++j) {
                            std::vector<Edge> es;
                            std::string d = " shared:";
                            attach(first_free, options[i], es, d);
                            if (shared == 2) attach(first_free + 1, options[j], es, d);
                            variants.push_back({es, d});
                        }
                } else {
                    const int x = n - 1;
                    auto subsets = [](std::vector<int> pool) {
                        std::vector<std::vector<int>> out;
                        for (std::size_t i = 0; i < pool.size(); ++i) {
                            out.push_back({pool[i]});
                            for (std::size_t j = i + 1; j < pool.size(); ++j) out.push_back({pool[i], pool[j]});
                        }
                        return out;
                    };
                    std::vector<int> P1{h1}, P2{h2};
                    P1.insert(P1.end(), W1.begin(), W1.end());
                    P2.insert(P2.end(), W2.begin(), W2.end());
                    for (const auto& A1 : subsets(P1))
                        for (const auto& A2 : subsets(P2)) {
                            std::vector<Edge> es;
                            std::string d = " extra:";
                            for (int v : A1) {
                                es.push_back({x, v});
                                d += " " + std::to_string(v);
                            }
                            d += " |";
                            for (int v : A2) {
                                es.push_back({x, v});
                                d += " " + std::to_string(v);
                            }
                            variants.push_back({es, d});
                        }
                }
                for (const auto& [extra_edges, vdesc] : variants)
                    for (const auto& cs : cross_sets) {
                        Graph g = base;
                        for (auto [u, v] : extra_edges) g.add_edge(u, v);
                        for (auto [u, v] : cs) g.add_edge(u, v);
                        if (g.size() > 2 * n - 3 || !g.connected() || !outerplanar(g)) continue;
                        if (opt.two_connected_only && !detail::biconnected(g)) continue;
                        std::string d = "a=" + std::to_string(a) + " b=" + std::to_string(b) + vdesc + " cross:";
                        for (auto [u, v] : cs) d += " " + std::to_string(u) + "-" + std::to_string(v);
                        visit(g, d);
                    }
            }
        }
}

inline SearchResult structured_search_two_hub(int n, int k = 2, const SearchOptions& opt = {}) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    std::vector<std::pair<Graph, std::string>> members;
    for_each_two_hub_member(n, opt, [&](const Graph& g, const std::string& d) { members.push_back({g, d}); });
    if (members.empty()) throw std::invalid_argument("empty family");
    std::vector<double> values(members.size());
    parallel_for(members.size(), opt.threads, [&](std::size_t i, int) { values[i] = lambda(members[i].first, k); });
    ArgmaxTracker tracker(opt.tie_tolerance);
    for (std::size_t i = 0; i < members.size(); ++i) tracker.offer(members[i].first, values[i], members[i].second);
    auto r = tracker.result(n, k, opt.two_connected_only ? "two-hub-structured-2conn" : "two-hub-structured");
    detail::finish_result(r);
    return r;
}

// ---- cut-vertex family ----

/// Every legal attachment of the cut vertex to one fan(q) copy: one vertex, or two consecutive
/// vertices of its outer cycle (hub, 1, ..., q-1).
inline std::vector<std::vector<int>> fan_attachments(int q) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < q; ++v) out.push_back({v});
    out.push_back({0, 1});
    out.push_back({0, q - 1});
    for (int j = 1; j + 1 < q; ++j) out.push_back({j, j + 1});
    return out;
}

inline SearchResult cut_vertex_search(int n, int k = 2, const SearchOptions& opt = {}) {
    if (n % 2 == 0 || n < 7) throw std::invalid_argument("cut-vertex family needs odd n >= 7");
    const int q = (n - 1) / 2;
    const auto side = fan_attachments(q);
    std::vector<std::pair<Graph, std::string>> members;
    for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i; j < side.size(); ++j) {
            std::string d = "attach:";
            for (int v : side[i]) d += " " + std::to_string(v);
            d += " |";
            for (int v : side[j]) d += " " + std::to_string(v);
            members.push_back({cut_vertex_family(q, {side[i], side[j]}), d});
        }
    std::vector<double> values(members.size());
    parallel_for(members.size(), opt.threads, [&](std::size_t i, int) { values[i] = lambda(members[i].first, k); });
    ArgmaxTracker tracker(opt.tie_tolerance);
    for (std::size_t i = 0; i < members.size(); ++i) tracker.offer(members[i].first, values[i], members[i].second);
    auto r = tracker.result(n, k, "cut-vertex-family");
    detail::finish_result(r);
    return r;
}

// ---- structured three-hub family ----

/// Three fans glued in a chain by two edges (all side choices), or three fans plus a centre adjacent to
/// one vertex of each; fan sizes as balanced as possible (max - min <= 2), all orders.
template <class Visit>
void for_each_three_hub_member(int n, Visit&& visit) {
    const FanSide sides[] = {FanSide::hub, FanSide::first_end, FanSide::last_end};
    auto size_triples = [](int total) {
        std::vector<std::vector<int>> out;
        for (int x = 3; x <= total; ++x)
            for (int y = 3; x + y <= total - 3; ++y) {
                const int z = total - x - y;
                if (std::max({x, y, z}) - std::min({x, y, z}) <= 2) out.push_back({x, y, z});
            }
        return out;
    };
    auto name = [](FanSide s) { return s == FanSide::hub ? "hub" : s == FanSide::first_end ? "first" : "last"; };
    for (const auto& sizes : size_triples(n)) {
        for (auto a : sides)
            for (auto b : sides)
                for (auto c : sides)
                    for (auto d : sides) {
                        Graph g(n);
                        auto off = detail::place_fans(g, sizes);
                        g.add_edge(detail::fan_side_vertex(off[0], sizes[0], a), detail::fan_side_vertex(off[1], sizes[1], b));
                        g.add_edge(detail::fan_side_vertex(off[1], sizes[1], c), detail::fan_side_vertex(off[2], sizes[2], d));
                        visit(g, "chain " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
                                     std::to_string(sizes[2]) + " glue " + name(a) + "-" + name(b) + " " + name(c) +
                                     "-" + name(d));
                    }
    }
    for (const auto& sizes : size_triples(n - 1)) {
        for (auto a : sides)
            for (auto b : sides)
                for (auto c : sides) {
                    Graph g(n);
                    auto off = detail::place_fans(g, sizes);
                    const FanSide pick[] = {a, b, c};
                    for (int i = 0; i < 3; ++i) g.add_edge(n - 1, detail::fan_side_vertex(off[i], sizes[i], pick[i]));
                    visit(g, "star " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
                                 std::to_string(sizes[2]) + " at " + name(a) + "," + name(b) + "," + name(c));
                }
    }
}

inline SearchResult structured_search_three_hub(int n, int k = 3, const SearchOptions& opt = {}) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    std::vector<std::pair<Graph, std::string>> members;
    for_each_three_hub_member(n, [&](const Graph& g, const std::string& d) { members.push_back({g, d}); });
    if (members.empty()) throw std::invalid_argument("empty family");
    std::vector<double> values(members.size());
    parallel_for(members.size(), opt.threads, [&](std::size_t i, int) { values[i] = lambda(members[i].first, k); });
    ArgmaxTracker tracker(opt.tie_tolerance);
    for (std::size_t i = 0; i < members.size(); ++i) tracker.offer(members[i].first, values[i], members[i].second);
    auto r = tracker.result(n, k, "three-hub-structured");
    detail::finish_result(r);
    return r;
}

/// Family tags: exhaustive, two-hub-structured, two-hub-structured-2conn, cut-vertex-family,
/// three-hub-structured.
inline SearchResult extremal_lambda_k(int n, int k, const std::string& family, const SearchOptions& opt = {}) {
    if (family == "exhaustive") return exhaustive_search(n, k, opt);
    if (family == "two-hub-structured") return structured_search_two_hub(n, k, opt);
    if (family == "two-hub-structured-2conn") {
        auto o = opt;
        o.two_connected_only = true;
        return structured_search_two_hub(n, k, o);
    }
    if (family == "cut-vertex-family") return cut_vertex_search(n, k, opt);
    if (family == "three-hub-structured") return structured_search_three_hub(n, k, opt);
    throw std::invalid_argument("unknown family tag: " + family);
}

// ---- structure reports ----

struct StructureReport {
    int n = 0, k = 0;
    double lambda = 0;
    std::vector<int> degrees;  // non-increasing
    std::vector<int> hubs;     // k vertices of largest degree (ties by label)
    int common_neighbors = 0;  // |N(u1) & N(u2)| for the first two hubs
    bool hubs_adjacent = false;
    int argmax_vertex = -1, argmin_vertex = -1;  // extremes of the lambda_k eigenvector
    bool extremes_at_hubs = false;
    bool simple = true;  // eigenvector fields are only filled when lambda_k is simple
    int positive = 0, zero = 0, negative = 0;  // sign classes with tolerance 1e-9
    std::vector<int> cut_vertices;
};

inline StructureReport verify_structure(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    StructureReport r;
    r.n = n;
    r.k = k;
    r.lambda = lambda(g, k);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int v : order) r.degrees.push_back(g.degree(v));
    r.hubs.assign(order.begin(), order.begin() + k);
    if (k >= 2) {
        const int u1 = r.hubs[0], u2 = r.hubs[1];
        for (int w = 0; w < n; ++w) r.common_neighbors += g.has_edge(u1, w) && g.has_edge(u2, w);
        r.hubs_adjacent = g.has_edge(u1, u2);
    }
    for (int v = 0; v < n; ++v)
        if (n > 2 && !g.without({v}).connected()) r.cut_vertices.push_back(v);
    EigenPair p;
    try {
        p = eigenpair(g, k);
    } catch (const multiplicity_error&) {
        r.simple = false;
        return r;
    }
    const auto& x = p.vector;
    r.argmax_vertex = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
    r.argmin_vertex = static_cast<int>(std::min_element(x.begin(), x.end()) - x.begin());
    auto is_hub = [&](int v) { return std::find(r.hubs.begin(), r.hubs.end(), v) != r.hubs.end(); };
    r.extremes_at_hubs = is_hub(r.argmax_vertex) && is_hub(r.argmin_vertex);
    for (double v : x) (v > 1e-9 ? r.positive : v < -1e-9 ? r.negative : r.zero)++;
    return r;
}

/// Top k degrees at least n/k - 3 sqrt(n), the other n - k at most 3 sqrt(n).
inline bool hub_degree_pattern(const StructureReport& r) {
    const double hi = double(r.n) / r.k - 3 * std::sqrt(double(r.n)), lo = 3 * std::sqrt(double(r.n));
    for (int i = 0; i < r.n; ++i) {
        if (i < r.k && r.degrees[i] < hi) return false;
        if (i >= r.k && r.degrees[i] > lo) return false;
    }
    return true;
}

// ---- conjectures ----

struct ConjectureRow {
    std::string kind;
    int n = 0, k = 0;
    std::string candidate;   // name of the conjectured extremal graph
    double candidate_value = 0;
    std::string scope;       // exhaustive | structured family searched
    double search_value = 0;
    std::string search_graph6;
    std::string status;      // CONSISTENT or COUNTEREXAMPLE(graph6)
};

namespace detail {

inline SearchResult conjecture_search(int n, int k, const SearchOptions& opt) {
    if (n <= kMaxOuterplanarEnumeration || (n == 12 && opt.allow_large)) return exhaustive_search(n, k, opt);
    return k == 2 ? structured_search_two_hub(n, 2, opt) : structured_search_three_hub(n, k, opt);
}

inline ConjectureRow conjecture_row(const std::string& kind, int n, int k, const std::string& name, double value,
                                    const SearchOptions& opt) {
    ConjectureRow row{kind, n, k, name, value, {}, 0, {}, {}};
    auto r = conjecture_search(n, k, opt);
    row.scope = r.family;
    row.search_value = r.best;
    row.search_graph6 = r.argmax.empty() ? "" : r.argmax.front();
    row.status = value >= r.best - opt.tie_tolerance ? "CONSISTENT" : "COUNTEREXAMPLE(" + row.search_graph6 + ")";
    return row;
}

}  // namespace detail

struct ChainCandidate {
    Graph graph;
    double value = 0;
    std::string glue;  // e.g. "last-hub last-hub"
};

/// Best lambda_3 over the 81 gluing variants of triple_fan_chain(q).
inline ChainCandidate best_triple_fan_chain(int q) {
    auto name = [](FanSide s) { return s == FanSide::hub ? "hub" : s == FanSide::first_end ? "first" : "last"; };
    std::optional<ChainCandidate> best;
    for (const auto& [x, y] : triple_fan_chain_variants()) {
        Graph g = triple_fan_chain(q, x, y);
        const double v = lambda(g, 3);
        if (!best || v > best->value)
            best = ChainCandidate{g, v,
                                  std::string(name(x.left)) + "-" + name(x.right) + " " + name(y.left) + "-" + name(y.right)};
    }
    return *best;
}

/// Best lambda_3 over the connected graphs left after deleting one minimum-degree vertex of any
/// gluing variant of the chain on 3(q+1).
inline std::pair<Graph, double> chain_minus_vertex(int q) {
    std::optional<std::pair<Graph, double>> best;
    for (const auto& [x, y] : triple_fan_chain_variants()) {
        const Graph chain = triple_fan_chain(q + 1, x, y);
        int dmin = chain.order();
        for (int v = 0; v < chain.order(); ++v) dmin = std::min(dmin, chain.degree(v));
        for (int v = 0; v < chain.order(); ++v) {
            if (chain.degree(v) != dmin) continue;
            Graph h = chain.without({v});
            if (!h.connected()) continue;
            const double val = lambda(h, 3);
            if (!best || val > best->second) best = {h, val};
        }
    }
    if (!best) throw std::logic_error("no connected deletion");
    return *best;
}

/// kinds: kq+1, 3q, 3q+2, even>=14. Rows for every feasible n up to max_n.
inline std::vector<ConjectureRow> conjecture_suite(const std::string& kind, int max_n, const SearchOptions& opt = {}) {
    std::vector<ConjectureRow> rows;
    if (kind == "kq+1") {
        for (int k : {2, 3})
            for (int q = 3; k * q + 1 <= max_n; ++q) {
                const int n = k * q + 1;
                rows.push_back(detail::conjecture_row(kind, n, k, "fan_star(" + std::to_string(k) + "," + std::to_string(n) + ")",
                                                      lambda(fan_star(k, n), k), opt));
            }
    } else if (kind == "3q") {
        for (int q = 3; 3 * q <= max_n; ++q) {
            auto c = best_triple_fan_chain(q);
            rows.push_back(detail::conjecture_row(kind, 3 * q, 3,
                                                  "triple_fan_chain(" + std::to_string(q) + ") glue " + c.glue, c.value, opt));
        }
    } else if (kind == "3q+2") {
        for (int q = 3; 3 * q + 2 <= max_n; ++q) {
            auto [g, v] = chain_minus_vertex(q);
            rows.push_back(detail::conjecture_row(kind, 3 * q + 2, 3,
                                                  "best triple_fan_chain(" + std::to_string(q + 1) + ") variant minus a min-degree vertex", v, opt));
        }
    } else if (kind == "even>=14") {
        for (int n = 14; n <= max_n; n += 2)
            rows.push_back(detail::conjecture_row(kind, n, 2, "bridged_double_fan(" + std::to_string(n / 2) + ")",
                                                  lambda(bridged_double_fan(n / 2), 2), opt));
    } else {
        throw std::invalid_argument("unknown conjecture kind: " + kind);
    }
    return rows;
}

}  // namespace opspec
