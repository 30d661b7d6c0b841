#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cone_planarity.hpp"
#include "constructions.hpp"
#include "eigen.hpp"
#include "enumerate.hpp"
#include "outerplanarity.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "walk_series.hpp"
#include "walks.hpp"

namespace opspec {

using ojson = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skipped: return "SKIPPED";
    }
    return "?";
}

inline Status parse_status(const std::string& s) {
    if (s == "PASS") return Status::pass;
    if (s == "FAIL") return Status::fail;
    if (s == "SKIPPED") return Status::skipped;
    throw std::invalid_argument("unknown status '" + s + "'");
}

struct Check {
    std::string id;      // "AC07.diamond-F2.q10": criterion number, topic, parameters
    std::string group;   // check group selectable from the config
    std::string anchor;  // the claim being reproduced, in words
    ojson parameters = ojson::object();
    ojson expected;
    ojson observed;
    double tolerance = 0;
    Status status = Status::skipped;
    double discrepancy = 0;  // numeric distance from the expected value (0 when exact)
    double runtime = 0;      // seconds
    std::string note;

    int criterion() const { return id.size() >= 4 && id.rfind("AC", 0) == 0 ? std::stoi(id.substr(2, 2)) : 0; }
    bool operator==(const Check&) const = default;
};

struct VerificationMatrix {
    std::vector<Check> checks;

    bool operator==(const VerificationMatrix&) const = default;

    bool any_failed() const {
        return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
    }

    /// Aggregate per criterion: FAIL if any check fails, SKIPPED if all are skipped, PASS otherwise.
    std::map<int, Status> criteria() const {
        std::map<int, Status> out;
        for (const auto& c : checks) {
            const int k = c.criterion();
            auto it = out.find(k);
            if (it == out.end()) {
                out[k] = c.status;
                continue;
            }
            if (c.status == Status::fail || it->second == Status::fail)
                it->second = Status::fail;
            else if (c.status == Status::pass)
                it->second = Status::pass;
        }
        return out;
    }
};

// ---- JSON ----

inline ojson to_json(const Check& c) {
    ojson j;
    j["id"] = c.id;
    j["group"] = c.group;
    j["anchor"] = c.anchor;
    j["parameters"] = c.parameters;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["tolerance"] = c.tolerance;
    j["status"] = to_string(c.status);
    j["discrepancy"] = c.discrepancy;
    j["runtime"] = c.runtime;
    j["note"] = c.note;
    return j;
}

inline Check check_from_json(const ojson& j) {
    Check c;
    c.id = j.at("id").get<std::string>();
    c.group = j.at("group").get<std::string>();
    c.anchor = j.at("anchor").get<std::string>();
    c.parameters = j.at("parameters");
    c.expected = j.at("expected");
    c.observed = j.at("observed");
    c.tolerance = j.at("tolerance").get<double>();
    c.status = parse_status(j.at("status").get<std::string>());
    c.discrepancy = j.at("discrepancy").get<double>();
    c.runtime = j.at("runtime").get<double>();
    c.note = j.value("note", "");
    return c;
}

inline ojson to_json(const VerificationMatrix& m) {
    ojson j;
    j["checks"] = ojson::array();
    for (const auto& c : m.checks) j["checks"].push_back(to_json(c));
    ojson summary = ojson::object();
    for (auto [k, s] : m.criteria()) summary[k ? "AC" + std::string(k < 10 ? "0" : "") + std::to_string(k) : "other"] = to_string(s);
    j["criteria"] = summary;
    return j;
}

inline VerificationMatrix matrix_from_json(const ojson& j) {
    VerificationMatrix m;
    for (const auto& c : j.at("checks")) m.checks.push_back(check_from_json(c));
    return m;
}

inline std::string render_json(const VerificationMatrix& m) { return to_json(m).dump(2) + "\n"; }

namespace detail {

inline std::string cell(const ojson& j) {
    std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    for (auto& ch : s)
        if (ch == '|') ch = '/';
    if (s.size() > 120) s = s.substr(0, 117) + "...";
    return s;
}

}  // namespace detail

/// Markdown tables, one section per check group, rows in id order.
inline std::string render_markdown(const VerificationMatrix& m) {
    std::ostringstream out;
    out << "# Verification matrix\n\n";
    if (m.checks.empty()) {
        out << "No checks.\n";
        return out.str();
    }
    std::map<std::string, std::vector<const Check*>> groups;
    for (const auto& c : m.checks) groups[c.group].push_back(&c);
    for (auto& [g, rows] : groups) {
        std::sort(rows.begin(), rows.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
        out << "## " << g << "\n\n";
        out << "| id | anchor | parameters | expected | observed | tolerance | status | discrepancy | runtime (s) |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto* c : rows) {
            out << "| " << c->id << " | " << c->anchor << " | " << detail::cell(c->parameters) << " | "
                << detail::cell(c->expected) << " | " << detail::cell(c->observed) << " | " << c->tolerance << " | "
                << to_string(c->status) << " | " << c->discrepancy << " | " << c->runtime << " |\n";
        }
        out << "\n";
    }
    out << "## Criteria\n\n| criterion | status |\n|---|---|\n";
    for (auto [k, s] : m.criteria()) out << "| AC" << (k < 10 ? "0" : "") << k << " | " << to_string(s) << " |\n";
    return out.str();
}

inline std::string report_render(const VerificationMatrix& m, const std::string& format) {
    if (format == "json") return render_json(m);
    if (format == "markdown" || format == "md") return render_markdown(m);
    throw std::invalid_argument("unknown report format '" + format + "' (json|markdown)");
}

// ---- configuration ----

enum class Budget { small, standard, large };

inline std::string to_string(Budget b) {
    switch (b) {
        case Budget::small: return "small";
        case Budget::standard: return "default";
        case Budget::large: return "large";
    }
    return "?";
}

inline Budget parse_budget(const std::string& s) {
    if (s == "small") return Budget::small;
    if (s == "default" || s == "standard") return Budget::standard;
    if (s == "large") return Budget::large;
    throw std::invalid_argument("unknown budget '" + s + "' (small|default|large)");
}

struct VerifyConfig {
    Budget budget = Budget::standard;
    std::set<std::string> groups;  // empty = all
    std::uint64_t seed = 0;
    int threads = 1;
    bool timing = true;             // record runtimes (the only nondeterministic field)
    double eigen_tolerance = 1e-9;  // agreement of eigenvalues that should coincide
    double tie_tolerance = kTieTolerance;
    int series_order = 30;          // truncation order for certified root comparisons
    int interlacing_pairs = 500;
    std::string checkpoint;         // NDJSON checkpoint for the n = 12 exhaustive run
};

inline const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> g{"walk-moments", "fan-series",   "bridged-series", "ordering",
                                            "cut-vertex",   "fig3",         "tables",         "g0-prime",
                                            "expansion",    "structure",    "path-counts",    "oracles",
                                            "two-connected"};
    return g;
}

/// JSON run file; every key is optional:
/// {"budget": "default", "groups": [...], "seed": 0, "threads": 1, "timing": true,
///  "tolerances": {"eigen": 1e-9, "tie": 1e-10}, "series_order": 30, "interlacing_pairs": 500, "checkpoint": ""}
inline VerifyConfig parse_config(const nlohmann::json& j) {
    static const std::set<std::string> keys{"budget", "groups", "seed", "threads", "timing", "tolerances",
                                            "series_order", "interlacing_pairs", "checkpoint"};
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [k, v] : j.items())
        if (!keys.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");
    VerifyConfig c;
    if (j.contains("budget")) c.budget = parse_budget(j["budget"].get<std::string>());
    if (j.contains("groups"))
        for (const auto& g : j["groups"]) {
            auto name = g.get<std::string>();
            if (std::find(check_groups().begin(), check_groups().end(), name) == check_groups().end())
                throw std::invalid_argument("unknown check group '" + name + "'");
            c.groups.insert(name);
        }
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    c.timing = j.value("timing", c.timing);
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        c.eigen_tolerance = t.value("eigen", c.eigen_tolerance);
        c.tie_tolerance = t.value("tie", c.tie_tolerance);
    }
    c.series_order = j.value("series_order", c.series_order);
    if (c.series_order < 1 || c.series_order > kMaxSeriesOrder) throw std::invalid_argument("series_order out of range");
    c.interlacing_pairs = j.value("interlacing_pairs", c.interlacing_pairs);
    c.checkpoint = j.value("checkpoint", c.checkpoint);
    if (c.threads < 1) throw std::invalid_argument("threads must be >= 1");
    return c;
}

inline VerifyConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

// ---- checks ----

namespace detail {

inline std::string criterion_id(int k, const std::string& rest) {
    return "AC" + std::string(k < 10 ? "0" : "") + std::to_string(k) + "." + rest;
}

inline Check new_check(int criterion, const std::string& rest, const std::string& group, const std::string& anchor) {
    Check c;
    c.id = criterion_id(criterion, rest);
    c.group = group;
    c.anchor = anchor;
    return c;
}

inline void decide(Check& c, bool ok, double discrepancy) {
    c.status = ok ? Status::pass : Status::fail;
    c.discrepancy = std::isfinite(discrepancy) ? discrepancy : std::numeric_limits<double>::max();
}

inline void skip(Check& c, const std::string& why) {
    c.status = Status::skipped;
    c.note = why;
}

template <class Body>
void timed(Check& c, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        c.status = Status::fail;
        c.discrepancy = std::numeric_limits<double>::max();
        c.note = std::string("error: ") + e.what();
    }
    c.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline ojson rationals(const std::vector<Rational>& v) {
    ojson a = ojson::array();
    for (const auto& r : v) {
        if (r.is_integer())
            a.push_back(r.num());
        else
            a.push_back(std::to_string(r.num()) + "/" + std::to_string(r.den()));
    }
    return a;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::int64_t max_abs_diff(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.size() != b.size()) return std::numeric_limits<std::int64_t>::max();
    std::int64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max<std::int64_t>(d, std::llabs(a[i] - b[i]));
    return d;
}

inline std::vector<std::int64_t> integers(const std::vector<Rational>& v) {
    std::vector<std::int64_t> out;
    for (const auto& r : v) {
        if (!r.is_integer()) throw std::domain_error("expected integer coefficients");
        out.push_back(r.num());
    }
    return out;
}

inline std::vector<std::int64_t> linear(const std::vector<std::pair<std::int64_t, std::int64_t>>& coeffs, int q) {
    std::vector<std::int64_t> out;
    for (auto [a, b] : coeffs) out.push_back(a * q + b);
    return out;
}

struct Task {
    std::string group;
    std::function<std::vector<Check>(const VerifyConfig&)> run;
};

// walk-moments
inline std::vector<Check> walk_moment_checks(const VerifyConfig&) {
    std::vector<Check> out;
    for (int q : {5, 10, 25, 50}) {
        auto c = new_check(1, "signed-moments.q" + std::to_string(q), "walk-moments",
                           "signed walk moments of the two-path remainder of the bridged double fan");
        c.parameters = {{"q", q}, {"orders", "0..5"}};
        const auto expected = linear({{2, -2}, {4, -10}, {8, -22}, {16, -56}, {32, -118}, {64, -272}}, q);
        c.expected = expected;
        timed(c, [&] {
            const auto d = decompose(bridged_double_fan(q), 0, q, HubMode::bound);
            std::vector<Rational> w(d.P.order(), Rational(0));
            for (int v : d.n1) w[v] = w[v] + Rational(1);
            for (int v : d.n2) w[v] = w[v] - Rational(1);
            std::vector<std::int64_t> got;
            for (int i = 0; i <= 5; ++i) got.push_back(signed_walk_moment(d.P, w, i).num());
            c.observed = got;
            decide(c, got == expected, static_cast<double>(max_abs_diff(got, expected)));
        });
        if (c.status == Status::pass && c.runtime >= 1.0) {
            c.status = Status::fail;
            c.note = "runtime limit 1 s exceeded";
        }
        out.push_back(std::move(c));
    }
    return out;
}

// fan-series and bridged-series
inline double fan_series(int n) {
    const double m = n - 1, r = std::sqrt(m);
    return r + 1 + 1 / (2 * r) - 1 / m - 1 / (8 * m * r) - 7 / (16 * m * m * r);
}

inline double bridged_series(int q) {
    const double m = q - 1, r = std::sqrt(m);
    return r + 1 + 1 / (2 * r) - 3 / (2 * m) + 7 / (8 * m * r) - 2 / (m * m);
}

inline std::vector<Check> fan_series_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    std::vector<int> ns{100, 200, 400, 800, 1600};
    if (cfg.budget == Budget::small) ns = {100, 200, 400};
    std::vector<double> xs, errs;
    double total = 0;
    for (int n : ns) {
        auto c = new_check(2, "fan-lambda1.n" + std::to_string(n), "fan-series",
                           "spectral radius of the fan against its expansion in 1/sqrt(n-1)");
        c.parameters = {{"n", n}};
        const double bound = 5 / std::pow(n - 1.0, 3);
        c.tolerance = bound;
        timed(c, [&] {
            const double l = lambda(fan(n), 1), s = fan_series(n), err = std::abs(l - s);
            c.expected = s;
            c.observed = l;
            xs.push_back(n - 1.0);
            errs.push_back(err);
            decide(c, err <= bound, err);
        });
        total += c.runtime;
        out.push_back(std::move(c));
    }
    auto c = new_check(2, "fan-lambda1.slope", "fan-series", "error decay of the fan expansion (log-log slope)");
    c.parameters = {{"n", ns}};
    c.expected = "<= -2.7";
    c.tolerance = 0;
    timed(c, [&] {
        if (errs.size() != ns.size()) throw std::runtime_error("missing error samples");
        const double slope = loglog_slope(xs, errs);
        c.observed = {{"slope", slope}, {"errors", errs}, {"solver_seconds", cfg.timing ? total : 0.0}};
        decide(c, slope <= -2.7 && total < 120, std::max(0.0, slope + 2.7));
    });
    if (cfg.budget == Budget::small) c.note = "n = 800, 1600 omitted under the small budget";
    out.push_back(std::move(c));
    return out;
}

inline std::vector<Check> bridged_series_checks(const VerifyConfig& cfg) {
    constexpr double C = 5;
    std::vector<Check> out;
    std::vector<int> qs{100, 200, 400, 800};
    if (cfg.budget == Budget::small) qs = {100, 200, 400};
    std::vector<double> xs, errs;
    for (int q : qs) {
        auto c = new_check(3, "bridged-lambda2.q" + std::to_string(q), "bridged-series",
                           "second eigenvalue of the bridged double fan against its expansion");
        c.parameters = {{"q", q}, {"C", C}};
        const double bound = C / std::pow(q - 1.0, 2.5);
        c.tolerance = bound;
        timed(c, [&] {
            const double l = lambda(bridged_double_fan(q), 2), s = bridged_series(q), err = std::abs(l - s);
            c.expected = s;
            c.observed = l;
            xs.push_back(q - 1.0);
            errs.push_back(err);
            decide(c, err <= bound, err);
        });
        out.push_back(std::move(c));
    }
    auto c = new_check(3, "bridged-lambda2.slope", "bridged-series",
                       "error decay of the bridged double fan expansion (log-log slope)");
    c.parameters = {{"q", qs}};
    c.expected = "<= -2.2";
    timed(c, [&] {
        if (errs.size() != qs.size()) throw std::runtime_error("missing error samples");
        const double slope = loglog_slope(xs, errs);
        c.observed = {{"slope", slope}, {"errors", errs}};
        decide(c, slope <= -2.2, std::max(0.0, slope + 2.2));
    });
    out.push_back(std::move(c));
    return out;
}

// ordering
inline std::vector<Check> ordering_checks(const VerifyConfig&) {
    std::vector<Check> out;
    for (int q : {20, 50, 100}) {
        auto c = new_check(4, "fan-beats-bridged.q" + std::to_string(q), "ordering",
                           "fan(q) spectral radius exceeds the bridged double fan second eigenvalue");
        c.parameters = {{"q", q}};
        const double need = 1.0 / (4 * (q - 1));
        c.expected = {{"min_gap", need}};
        c.tolerance = need;
        timed(c, [&] {
            const double a = lambda(fan(q), 1), b = lambda(bridged_double_fan(q), 2);
            c.observed = {{"lambda1_fan", a}, {"lambda2_bridged", b}, {"gap", a - b}};
            decide(c, a - b >= need, std::max(0.0, need - (a - b)));
        });
        out.push_back(std::move(c));
    }
    return out;
}

// cut-vertex
inline std::vector<Check> cut_vertex_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    for (int q = 6; q <= 20; ++q) {
        auto c = new_check(5, "cut-vertex-equality.q" + std::string(q < 10 ? "0" : "") + std::to_string(q),
                           "cut-vertex", "second eigenvalue of two fans through a cut vertex equals lambda1(fan(q))");
        c.parameters = {{"q", q}};
        c.tolerance = cfg.eigen_tolerance;
        timed(c, [&] {
            const double target = lambda(fan(q), 1);
            const auto side = fan_attachments(q);
            double worst = 0;
            int members = 0;
            for (std::size_t i = 0; i < side.size(); ++i)
                for (std::size_t j = i; j < side.size(); ++j) {
                    worst = std::max(worst, std::abs(lambda(cut_vertex_family(q, {side[i], side[j]}), 2) - target));
                    ++members;
                }
            c.expected = target;
            c.observed = {{"descriptors", members}, {"max_deviation", worst}};
            decide(c, members >= 5 && worst <= cfg.eigen_tolerance, worst);
        });
        out.push_back(std::move(c));
    }
    return out;
}

// fig3
inline std::vector<Check> fig3_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    auto c = new_check(6, "fig3-beats-bridged", "fig3",
                       "the 12-vertex apex graph has larger second eigenvalue than the bridged double fan");
    c.parameters = {{"n", 12}};
    c.tolerance = 1e-10;
    timed(c, [&] {
        const auto a = eigenpair(figure3_graph(), 2), b = eigenpair(bridged_double_fan(6), 2);
        c.expected = "lambda2(figure3) > lambda2(bridged(6))";
        c.observed = {{"lambda2_figure3", a.value},
                      {"lambda2_bridged", b.value},
                      {"residuals", {a.residual, b.residual}}};
        decide(c, a.value - b.value > 1e-10 && a.residual <= 1e-10 && b.residual <= 1e-10,
               std::max(0.0, b.value - a.value));
    });
    out.push_back(std::move(c));

    auto e = new_check(6, "fig3-unique-argmax", "fig3",
                       "exhaustive n = 12 search: the apex graph is the unique lambda2 maximizer");
    e.parameters = {{"n", 12}, {"k", 2}};
    if (cfg.budget == Budget::small) {
        skip(e, "exhaustive n = 12 search needs the default or large budget");
    } else {
        timed(e, [&] {
            SearchOptions o;
            o.threads = 1;
            o.allow_large = true;
            o.tie_tolerance = cfg.tie_tolerance;
            o.checkpoint = cfg.checkpoint;
            o.resume = !cfg.checkpoint.empty();
            const auto r = exhaustive_search(12, 2, o);
            const auto want = class_graph6(figure3_graph());
            e.expected = {{"argmax", {want}}};
            e.observed = {{"best", r.best}, {"argmax", r.argmax}, {"runner_up", r.runner_up}, {"candidates", r.candidates}};
            decide(e, r.argmax.size() == 1 && r.argmax[0] == want, r.argmax.size() == 1 && r.argmax[0] == want ? 0 : 1);
        });
    }
    out.push_back(std::move(e));
    return out;
}

// tables
inline std::vector<Check> table_checks(const VerifyConfig&) {
    std::vector<Check> out;
    const std::string anchor = "split-mode walk-moment tables of the diamond double fan";
    for (int q : {10, 30}) {
        const auto qs = std::to_string(q);
        auto f2 = new_check(7, "diamond-F2.q" + qs, "tables", anchor);
        auto dd = new_check(7, "diamond-D.q" + qs, "tables", anchor + " (cross moments, orders 1..6)");
        auto ce = new_check(7, "diamond-even-combined.q" + qs, "tables", anchor + " (combined even equation)");
        auto od = new_check(7, "diamond-odd-eliminated.q" + qs, "tables", anchor + " (odd order, eliminated ratio)");
        f2.parameters = dd.parameters = ce.parameters = {{"q", q}, {"n", 2 * q}, {"hubs", {0, q}}};
        od.parameters = {{"q", q}, {"n", 2 * q + 1}, {"hubs", {0, q}}};
        const auto F2 = linear({{1, -1}, {2, -4}, {4, -8}, {8, -16}, {16, -28}, {32, -48}, {64, -64}}, q);
        const std::vector<std::int64_t> D{2, 6, 16, 42, 104, 260};
        const auto even = linear({{1, -1}, {2, -6}, {4, -14}, {8, -32}, {16, -70}, {32, -152}, {64, -324}}, q);
        const auto odd = linear({{1, -1}, {2, -4}, {4, -12}, {8, -32}, {16, -64}, {32, -112}, {64, -232}}, q);
        f2.expected = F2;
        dd.expected = D;
        ce.expected = even;
        od.expected = odd;
        SplitSeries s;
        timed(f2, [&] {
            s = split_series(decompose(diamond_double_fan(2 * q), 0, q, HubMode::split), 6);
            const auto got = integers(*s.F2.exact);
            f2.observed = got;
            decide(f2, got == F2, static_cast<double>(max_abs_diff(got, F2)));
        });
        timed(dd, [&] {
            // the table starts at order 1; D_0 = 0 because N(u1) and N(u2) are disjoint
            auto all = integers(*s.D.exact);
            std::vector<std::int64_t> got(all.begin() + 1, all.end());
            dd.observed = got;
            decide(dd, got == D, static_cast<double>(max_abs_diff(got, D)));
        });
        timed(ce, [&] {
            const auto got = integers(*combined_even(s).exact);
            ce.observed = got;
            decide(ce, got == even, static_cast<double>(max_abs_diff(got, even)));
        });
        od.tolerance = 1e-9;
        timed(od, [&] {
            const auto so = split_series(decompose(diamond_double_fan(2 * q + 1), 0, q, HubMode::split), 6);
            const auto e = eliminate_ratio(so);
            double worst = 0;
            for (std::size_t i = 0; i < odd.size(); ++i) worst = std::max(worst, std::abs(e.combined.at(i) - odd[i]));
            od.observed = e.combined;
            decide(od, worst <= 1e-9, worst);
        });
        for (auto* c : {&f2, &dd, &ce, &od}) out.push_back(std::move(*c));
    }
    return out;
}

// g0-prime
inline std::vector<Check> g0_prime_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    for (int n : {21, 41}) {
        const int h = n / 2;
        const auto ns = std::to_string(n);
        auto d3 = new_check(8, "D3.n" + ns, "g0-prime", "order-3 cross moment separates the parallel and crossed joins");
        d3.parameters = {{"n", n}, {"hubs", {0, h}}};
        d3.expected = {{"g0_prime", 17}, {"diamond", 16}};
        SplitSeries sp, sd;
        timed(d3, [&] {
            sp = split_series(decompose(g0_prime(Parity::odd, n), 0, h, HubMode::split), cfg.series_order);
            sd = split_series(decompose(diamond_double_fan(n), 0, h, HubMode::split), cfg.series_order);
            const auto a = (*sp.D.exact)[3], b = (*sd.D.exact)[3];
            d3.observed = {{"g0_prime", a.num()}, {"diamond", b.num()}};
            decide(d3, a == Rational(17) && b == Rational(16),
                   std::abs(a.to_double() - 17) + std::abs(b.to_double() - 16));
        });
        out.push_back(std::move(d3));

        auto cr = new_check(8, "certified-order.n" + ns, "g0-prime",
                            "crossed join has strictly larger second eigenvalue than the parallel join");
        cr.parameters = {{"n", n}, {"order", cfg.series_order}};
        cr.expected = "lambda2(diamond) > lambda2(g0_prime), certified and numeric";
        timed(cr, [&] {
            const auto cert = compare_roots(eliminate_ratio(sd), eliminate_ratio(sp));
            const double a = lambda(diamond_double_fan(n), 2), b = lambda(g0_prime(Parity::odd, n), 2);
            cr.observed = {{"verdict", to_string(cert.verdict)},
                           {"margin", cert.margin},
                           {"interval", {cert.interval.lo, cert.interval.hi}},
                           {"lambda2_diamond", a},
                           {"lambda2_g0_prime", b},
                           {"reason", cert.reason}};
            decide(cr, cert.verdict == Verdict::f_greater && a - b > 0, std::max(0.0, b - a));
        });
        out.push_back(std::move(cr));
    }
    return out;
}

// expansion
inline std::vector<Check> expansion_checks(const VerifyConfig&) {
    std::vector<Check> out;
    // coefficient ratios a_i / a_0 of fan(10): (9, 16, 30, 56, 106) / 9
    const std::vector<long double> ratio{1.0L, 16.0L / 9, 30.0L / 9, 56.0L / 9, 106.0L / 9};
    std::vector<double> xs, errs;
    for (double a0 : {1e2, 1e3, 1e4, 1e5}) {
        auto c = new_check(9, "root-expansion.a0-1e" + std::to_string(static_cast<int>(std::lround(std::log10(a0)))),
                           "expansion", "largest-root expansion in powers of 1/sqrt(a0)");
        c.parameters = {{"a0", a0}, {"ratios", "fan(10) coefficients / 9"}};
        timed(c, [&] {
            std::vector<long double> a;
            for (auto r : ratio) a.push_back(r * a0);
            auto h = [&](long double x) {
                long double s = 0, p = 1;
                for (auto v : a) {
                    s += v / p;
                    p *= x;
                }
                return x * x - s;
            };
            long double lo = std::sqrt(a[0]), hi = lo + a[1] / a[0] + 2;
            for (int i = 0; i < 200; ++i) {
                const long double mid = (lo + hi) / 2;
                (h(mid) < 0 ? lo : hi) = mid;
            }
            const double root = static_cast<double>((lo + hi) / 2);
            const auto e = expand_largest_root(double(a[0]), double(a[1]), double(a[2]), double(a[3]), double(a[4]));
            const double err = std::abs(e.predicted - root);
            c.expected = root;
            c.observed = e.predicted;
            xs.push_back(a0);
            errs.push_back(err);
            decide(c, std::isfinite(err), err);
        });
        out.push_back(std::move(c));
    }
    auto c = new_check(9, "root-expansion.slope", "expansion", "expansion error decay in a0 (log-log slope)");
    c.expected = "<= -1.9";
    timed(c, [&] {
        const double slope = loglog_slope(xs, errs);
        c.observed = {{"slope", slope}, {"errors", errs}};
        decide(c, slope <= -1.9, std::max(0.0, slope + 1.9));
    });
    out.push_back(std::move(c));
    return out;
}

// structure
inline SearchResult best_for(int n, int k, const VerifyConfig& cfg) {
    SearchOptions o;
    o.tie_tolerance = cfg.tie_tolerance;
    if (n <= kMaxOuterplanarEnumeration) return exhaustive_search(n, k, o);
    if (n == 12 && cfg.budget != Budget::small) {
        o.allow_large = true;
        return exhaustive_search(n, k, o);
    }
    return k == 2 ? structured_search_two_hub(n, 2, o) : structured_search_three_hub(n, k, o);
}

inline Check structure_check(int n, int k, const VerifyConfig& cfg) {
    auto c = new_check(10, "hub-degrees.k" + std::to_string(k) + ".n" + std::string(n < 10 ? "0" : "") + std::to_string(n),
                       "structure", "maximizers have k hubs of linear degree and all other degrees O(sqrt n)");
    c.parameters = {{"n", n}, {"k", k}};
    c.expected = {{"top_k_at_least", double(n) / k - 3 * std::sqrt(double(n))}, {"others_at_most", 3 * std::sqrt(double(n))}};
    timed(c, [&] {
        const auto r = best_for(n, k, cfg);
        const auto s = verify_structure(r.best_graph, k);
        const bool ok = hub_degree_pattern(s);
        c.observed = {{"search", r.family}, {"lambda", r.best}, {"degrees", s.degrees}, {"graph6", r.argmax.front()}};
        decide(c, ok, ok ? 0 : 1);
    });
    return c;
}

inline Check window_check(int n, int k, const VerifyConfig& cfg) {
    auto c = new_check(10, "lambda-window.k" + std::to_string(k) + ".n" + std::to_string(n), "structure",
                       "lambda_k of the structured maximizer is sqrt(n/k) + 1 + O(1/sqrt n)");
    const double centre = std::sqrt(double(n) / k) + 1, half = 5 / std::sqrt(double(n));
    c.parameters = {{"n", n}, {"k", k}};
    c.expected = {{"lo", centre - half}, {"hi", centre + half}};
    c.tolerance = half;
    if (cfg.budget == Budget::small) {
        skip(c, "structured search at n = 100 needs the default or large budget");
        return c;
    }
    timed(c, [&] {
        const auto r = best_for(n, k, cfg);
        const auto s = verify_structure(r.best_graph, k);
        c.observed = {{"search", r.family}, {"lambda", r.best}, {"hub_pattern", hub_degree_pattern(s)}};
        const double dev = std::abs(r.best - centre);
        decide(c, dev <= half && hub_degree_pattern(s), dev);
    });
    return c;
}

// path-counts
inline std::vector<Check> path_count_checks(const VerifyConfig&) {
    auto c = new_check(11, "path-count-maxima", "path-counts",
                       "u-v path counts with 2, 3 and 4 edges in connected outerplanar graphs");
    c.parameters = {{"n", "2..9"}, {"graphs", "all connected outerplanar"}};
    c.expected = {{"h2", 2}, {"h3", 8}, {"h4", 98}};
    timed(c, [&] {
        std::int64_t h2 = 0, h3 = 0, h4 = 0, graphs = 0;
        for (int n = 2; n <= 9; ++n)
            for (const auto& g : enumerate_outerplanar(n, true)) {
                ++graphs;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        const auto p = path_counts(g, u, v);
                        h2 = std::max(h2, p.h2);
                        h3 = std::max(h3, p.h3);
                        h4 = std::max(h4, p.h4);
                    }
            }
        c.observed = {{"h2", h2}, {"h3", h3}, {"h4", h4}, {"graphs", graphs}};
        const double excess = std::max({0.0, double(h2 - 2), double(h3 - 8), double(h4 - 98)});
        decide(c, excess == 0, excess);
    });
    return {c};
}

// oracles
inline std::vector<Check> oracle_checks(const VerifyConfig& cfg) {
    std::vector<Check> out;
    auto counts = new_check(12, "enumeration-vs-labeled", "oracles",
                            "isomorphism-class counts agree with labeled generation plus dedup");
    counts.parameters = {{"n", "1..6"}, {"classes", "outerplanar, connected outerplanar"}};
    timed(counts, [&] {
        ojson obs = ojson::array(), exp = ojson::array();
        double bad = 0;
        for (bool conn : {true, false})
            for (int n = 1; n <= 6; ++n) {
                const auto a = static_cast<std::int64_t>(enumerate_outerplanar(n, conn).size());
                const auto b = count_by_labeled_generation(n, conn);
                obs.push_back(a);
                exp.push_back(b);
                bad += std::abs(double(a - b));
            }
        counts.observed = obs;
        counts.expected = exp;
        decide(counts, bad == 0, bad);
    });
    out.push_back(std::move(counts));

    auto cone = new_check(12, "cone-vs-minors", "oracles",
                          "outerplanarity via planarity of the cone agrees with forbidden-minor search");
    cone.parameters = {{"n", "1..8"}, {"graphs", "all"}};
    timed(cone, [&] {
        std::int64_t graphs = 0, disagree = 0, outer = 0;
        EnumerationOptions o;
        o.connected_only = false;
        o.outerplanar_only = false;
        for (int n = 1; n <= 8; ++n)
            for (const auto& g : enumerate_graphs(n, o).graphs) {
                ++graphs;
                const bool a = outerplanar_by_cone(g), b = outerplanar_by_minors(g), c = outerplanar(g);
                disagree += a != b || a != c;
                outer += a;
            }
        cone.expected = {{"disagreements", 0}};
        cone.observed = {{"graphs", graphs}, {"outerplanar", outer}, {"disagreements", disagree}};
        decide(cone, disagree == 0, double(disagree));
    });
    out.push_back(std::move(cone));

    auto il = new_check(12, "interlacing", "oracles", "Cauchy interlacing on random induced subgraphs");
    il.parameters = {{"pairs", cfg.interlacing_pairs}, {"seed", cfg.seed}, {"n", "4..30"}};
    il.tolerance = cfg.eigen_tolerance;
    timed(il, [&] {
        std::mt19937_64 rng(cfg.seed);
        double worst = 0;
        int failures = 0;
        for (int t = 0; t < cfg.interlacing_pairs; ++t) {
            const int n = std::uniform_int_distribution<int>(4, 30)(rng);
            const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
            Graph g(n);
            std::bernoulli_distribution edge(p);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (edge(rng)) g.add_edge(u, v);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            perm.resize(std::uniform_int_distribution<int>(1, n - 1)(rng));
            const auto r = check_interlacing(g, perm, cfg.eigen_tolerance);
            worst = std::max(worst, r.max_violation);
            failures += !r.holds;
        }
        il.expected = {{"max_violation_at_most", cfg.eigen_tolerance}};
        il.observed = {{"max_violation", worst}, {"failures", failures}};
        decide(il, failures == 0, std::max(0.0, worst));
    });
    out.push_back(std::move(il));
    return out;
}

// two-connected
inline Check two_connected_check(int n, const VerifyConfig& cfg) {
    auto c = new_check(13, "diamond-argmax.n" + std::to_string(n), "two-connected",
                       "crossed-join double fan maximizes lambda2 within the structured 2-connected family");
    c.parameters = {{"n", n}, {"family", "two-hub-structured-2conn"}};
    timed(c, [&] {
        SearchOptions o;
        o.tie_tolerance = cfg.tie_tolerance;
        o.two_connected_only = true;
        const auto r = structured_search_two_hub(n, 2, o);
        const auto want = class_graph6(diamond_double_fan(n));
        const double target = lambda(diamond_double_fan(n), 2);
        c.expected = {{"argmax", {want}}, {"lambda2", target}};
        c.observed = {{"argmax", r.argmax}, {"best", r.best}, {"runner_up", r.runner_up}, {"gap", r.gap},
                      {"candidates", r.candidates}};
        const bool ok = r.argmax.size() == 1 && r.argmax[0] == want;
        decide(c, ok, std::abs(r.best - target));
    });
    return c;
}

inline std::vector<Task> tasks() {
    std::vector<Task> t;
    t.push_back({"walk-moments", walk_moment_checks});
    t.push_back({"fan-series", fan_series_checks});
    t.push_back({"bridged-series", bridged_series_checks});
    t.push_back({"ordering", ordering_checks});
    t.push_back({"cut-vertex", cut_vertex_checks});
    t.push_back({"fig3", fig3_checks});
    t.push_back({"tables", table_checks});
    t.push_back({"g0-prime", g0_prime_checks});
    t.push_back({"expansion", expansion_checks});
    for (int k : {2, 3}) {
        for (int n : {9, 10, 12, 20, 30})
            t.push_back({"structure", [n, k](const VerifyConfig& c) { return std::vector<Check>{structure_check(n, k, c)}; }});
        t.push_back({"structure", [k](const VerifyConfig& c) { return std::vector<Check>{window_check(100, k, c)}; }});
    }
    t.push_back({"path-counts", path_count_checks});
    t.push_back({"oracles", oracle_checks});
    for (int n = 14; n <= 30; ++n)
        t.push_back({"two-connected", [n](const VerifyConfig& c) { return std::vector<Check>{two_connected_check(n, c)}; }});
    return t;
}

}  // namespace detail

/// Runs the selected check groups on a pool of cfg.threads workers; checks are sorted by id.
inline VerificationMatrix verify_paper(const VerifyConfig& cfg = {}) {
    std::vector<detail::Task> selected;
    for (auto& t : detail::tasks())
        if (cfg.groups.empty() || cfg.groups.count(t.group)) selected.push_back(std::move(t));
    std::vector<std::vector<Check>> results(selected.size());
    parallel_for(selected.size(), cfg.threads, [&](std::size_t i, int) { results[i] = selected[i].run(cfg); });
    VerificationMatrix m;
    for (auto& r : results)
        for (auto& c : r) {
            if (!cfg.timing) c.runtime = 0;
            m.checks.push_back(std::move(c));
        }
    std::sort(m.checks.begin(), m.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < m.checks.size(); ++i)
        if (m.checks[i].id == m.checks[i - 1].id) throw std::logic_error("duplicate check id " + m.checks[i].id);
    return m;
}

}  // namespace opspec
