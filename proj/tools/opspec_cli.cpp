#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <opspec/opspec.hpp>

using namespace opspec;
using nlohmann::json;

namespace {

struct Globals {
    bool json = false;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string budget = "default";
};

/// --in accepts a file of graph6 lines or a literal graph6 string.
std::vector<Graph> read_graphs(const std::string& in) {
    std::vector<Graph> out;
    if (std::filesystem::is_regular_file(in)) {
        std::ifstream f(in);
        std::string line;
        while (std::getline(f, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line.rfind(">>graph6<<", 0) == 0) continue;
            out.push_back(graph6_decode(line));
        }
        if (out.empty()) throw std::invalid_argument("no graphs in " + in);
    } else {
        out.push_back(graph6_decode(in));
    }
    return out;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    if (path.empty() || path == "-") {
        for (const auto& l : lines) std::cout << l << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    for (const auto& l : lines) f << l << "\n";
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

json rational_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.is_integer() ? std::to_string(r.num()) : std::to_string(r.num()) + "/" + std::to_string(r.den()));
    return a;
}

json series_json(const SeriesEquation& s) {
    json j{{"label", s.label}, {"a", s.a}, {"U", s.U}, {"sigma", s.sigma}};
    if (s.exact) j["exact"] = rational_array(*s.exact);
    return j;
}

json root_json(const RootEnclosure& r) {
    return {{"root", r.root},
            {"enclosure", {r.enclosure.lo, r.enclosure.hi}},
            {"tail", r.tail},
            {"monotone", r.monotone},
            {"certified", r.certified}};
}

json result_json(const SearchResult& r) {
    json j{{"n", r.n}, {"k", r.k}, {"family", r.family}, {"best", r.best}, {"argmax", r.argmax},
           {"description", r.best_description}, {"candidates", r.candidates}};
    j["runner_up"] = std::isnan(r.runner_up) ? json(nullptr) : json(r.runner_up);
    j["gap"] = std::isnan(r.gap) ? json(nullptr) : json(r.gap);
    json res = json::array();
    for (double v : r.residuals) res.push_back(std::isnan(v) ? json(nullptr) : json(v));
    j["residuals"] = res;
    return j;
}

std::string fixed(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral extremal problems on outerplanar graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--budget", g.budget, "size budget")->check(CLI::IsMember({"small", "default", "large"}));

    // construct
    auto* construct = app.add_subcommand("construct", "build a named graph family member");
    FamilySpec spec;
    std::string attach, out_path;
    construct->add_option("--family", spec.family, "fan | bridged-double-fan | diamond-double-fan | fan-star | "
                                                   "cut-vertex-family | figure3 | g0-prime-even | g0-prime-odd | "
                                                   "triple-fan-chain | triple-fan-star")
        ->required();
    construct->add_option("--n", spec.n, "order");
    construct->add_option("--q", spec.q, "fan size");
    construct->add_option("--k", spec.k, "number of fans");
    construct->add_option("--attach", attach, "cut-vertex attachments, e.g. 1,2/0");
    construct->add_option("--out", out_path, "graph6 output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "outerplanarity with certificate");
    std::string in;
    bool witness = false;
    check->add_option("--in", in, "graph6 file or string")->required();
    check->add_flag("--witness", witness, "print the embedding or minor witness");

    // eig
    auto* eig = app.add_subcommand("eig", "k-th largest adjacency eigenvalue");
    int k = 1;
    bool with_vector = false;
    eig->add_option("--in", in, "graph6 file or string")->required();
    eig->add_option("--k", k, "1-based index")->check(CLI::PositiveNumber);
    eig->add_flag("--vector", with_vector, "include the eigenvector");

    // series
    auto* series = app.add_subcommand("series", "characteristic series of a two-hub graph");
    std::string hubs, mode = "symmetric";
    int order = kDefaultSeriesOrder;
    series->add_option("--in", in, "graph6 file or string")->required();
    series->add_option("--hubs", hubs, "u1,u2")->required();
    series->add_option("--mode", mode, "symmetric | exact | bound | split");
    series->add_option("--order", order, "truncation order m")->check(CLI::Range(0, kMaxSeriesOrder));

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "outerplanar graphs up to isomorphism");
    int n = 0;
    bool connected = false, all_graphs = false, allow_large = false;
    std::int64_t max_candidates = 0;
    std::string resume;
    enumerate->add_option("--n", n, "order")->required();
    enumerate->add_flag("--connected", connected, "connected graphs only");
    enumerate->add_flag("--all-graphs", all_graphs, "drop the outerplanarity filter");
    enumerate->add_flag("--allow-large", allow_large, "permit n = 12");
    enumerate->add_option("--max-candidates", max_candidates, "stop after this many final-level candidates");
    enumerate->add_option("--resume", resume, "resume token from an interrupted run");
    enumerate->add_option("--out", out_path, "graph6 output file (default stdout)");

    // extremal
    auto* extremal = app.add_subcommand("extremal", "maximize lambda_k over a family");
    std::string family = "exhaustive", checkpoint;
    bool resume_checkpoint = false;
    extremal->add_option("--n", n, "order")->required();
    extremal->add_option("--k", k, "eigenvalue index")->check(CLI::PositiveNumber);
    extremal->add_option("--family", family,
                         "exhaustive | two-hub-structured | two-hub-structured-2conn | cut-vertex-family | "
                         "three-hub-structured");
    extremal->add_flag("--allow-large", allow_large, "permit exhaustive n = 12");
    extremal->add_option("--checkpoint", checkpoint, "NDJSON checkpoint file");
    extremal->add_flag("--resume", resume_checkpoint, "continue from the last checkpoint line");

    // conjectures
    auto* conjectures = app.add_subcommand("conjectures", "compare conjectured extremal graphs with searches");
    std::string kind;
    int max_n = 0;
    conjectures->add_option("--kind", kind, "kq+1 | 3q | 3q+2 | even>=14")->required();
    conjectures->add_option("--max-n", max_n, "largest order")->required();
    conjectures->add_flag("--allow-large", allow_large, "exhaustive search at n = 12");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
    std::string config_path, json_out = "verification.json", md_out = "verification.md";
    std::vector<std::string> groups;
    bool no_timing = false;
    verify->add_option("--config", config_path, "JSON run file");
    verify->add_option("--group", groups, "restrict to check groups (repeatable)");
    verify->add_option("--out", json_out, "matrix JSON path");
    verify->add_option("--markdown", md_out, "matrix markdown path");
    verify->add_flag("--no-timing", no_timing, "record zero runtimes for byte-stable output");

    // report
    auto* report = app.add_subcommand("report", "render a stored verification matrix");
    std::string format = "markdown";
    report->add_option("--in", in, "matrix JSON")->required();
    report->add_option("--format", format, "json | markdown");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            if (!attach.empty()) {
                const auto slash = attach.find('/');
                if (slash == std::string::npos) throw std::invalid_argument("--attach expects side0/side1, e.g. 1,2/0");
                spec.attach = {parse_ints(attach.substr(0, slash)), parse_ints(attach.substr(slash + 1))};
            }
            const Graph gr = build_family(spec);
            if (g.json) {
                std::cout << json{{"family", spec.family}, {"n", gr.order()}, {"m", gr.size()},
                                  {"graph6", graph6_encode(gr)}}.dump(2)
                          << "\n";
                if (!out_path.empty()) write_lines(out_path, {graph6_encode(gr)});
            } else {
                write_lines(out_path, {graph6_encode(gr)});
            }
            return 0;
        }
        if (*check) {
            json all = json::array();
            bool every = true;
            for (const auto& gr : read_graphs(in)) {
                const auto cert = is_outerplanar(gr);
                every &= cert.outerplanar;
                json j{{"graph6", graph6_encode(gr)}, {"outerplanar", cert.outerplanar}};
                if (witness) {
                    if (cert.outerplanar)
                        j["embedding"] = cert.embedding;
                    else
                        j["witness"] = {{"kind", to_string(cert.witness->kind)}, {"branch_sets", cert.witness->branch_sets}};
                }
                if (g.json) {
                    all.push_back(j);
                    continue;
                }
                std::cout << j["graph6"].get<std::string>() << " " << (cert.outerplanar ? "outerplanar" : "not-outerplanar");
                if (witness && cert.outerplanar) {
                    std::cout << " order";
                    for (int v : cert.embedding) std::cout << " " << v;
                } else if (witness) {
                    std::cout << " " << to_string(cert.witness->kind) << "-minor";
                    for (const auto& b : cert.witness->branch_sets) {
                        std::cout << " {";
                        for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
                        std::cout << "}";
                    }
                }
                std::cout << "\n";
            }
            if (g.json) std::cout << all.dump(2) << "\n";
            return every ? 0 : 1;
        }
        if (*eig) {
            json all = json::array();
            for (const auto& gr : read_graphs(in)) {
                json j{{"graph6", graph6_encode(gr)}, {"k", k}};
                if (with_vector) {
                    const auto p = eigenpair(gr, k);
                    j["value"] = p.value;
                    j["vector"] = p.vector;
                    j["residual"] = p.residual;
                } else {
                    j["value"] = lambda(gr, k);
                }
                if (g.json) {
                    all.push_back(j);
                    continue;
                }
                std::cout << j["graph6"].get<std::string>() << " lambda_" << k << " = " << fixed(j["value"]) << "\n";
                if (with_vector) {
                    for (double x : j["vector"]) std::cout << " " << fixed(x, 9);
                    std::cout << "\n";
                }
            }
            if (g.json) std::cout << all.dump(2) << "\n";
            return 0;
        }
        if (*series) {
            const auto hv = parse_ints(hubs);
            if (hv.size() != 2) throw std::invalid_argument("--hubs expects u1,u2");
            const Graph gr = read_graphs(in).front();
            const auto d = decompose(gr, hv[0], hv[1], parse_hub_mode(mode));
            json j{{"graph6", graph6_encode(gr)}, {"hubs", hv}, {"mode", mode}, {"order", order}};
            if (d.mode == HubMode::split) {
                const auto s = split_series(d, order);
                const auto e = eliminate_ratio(s);
                j["F1"] = series_json(s.F1);
                j["F2"] = series_json(s.F2);
                j["D"] = series_json(s.D);
                j["eliminated"] = e.combined;
                if (auto ex = eliminated_exact(s)) j["eliminated_exact"] = rational_array(*ex);
                j["solution"] = root_json(solve_char_equation(e));
            } else {
                const auto s = series_coefficients(d, order);
                j["series"] = series_json(s);
                j["ratio"] = d.ratio;
                j["solution"] = root_json(solve_char_equation(s));
            }
            if (g.json) {
                std::cout << j.dump(2) << "\n";
            } else {
                const auto& sol = j["solution"];
                std::cout << "mode " << mode << ", order " << order << "\n";
                if (j.contains("series"))
                    std::cout << "a = " << (j["series"].contains("exact") ? j["series"]["exact"].dump() : j["series"]["a"].dump()) << "\n";
                else
                    std::cout << "F1 = " << j["F1"]["exact"].dump() << "\nF2 = " << j["F2"]["exact"].dump()
                              << "\nD  = " << j["D"]["exact"].dump() << "\nE  = " << j["eliminated"].dump() << "\n";
                std::cout << "root " << fixed(sol["root"]) << " in [" << fixed(sol["enclosure"][0]) << ", "
                          << fixed(sol["enclosure"][1]) << "]" << (sol["certified"].get<bool>() ? "" : " (not certified)")
                          << "\n";
            }
            return 0;
        }
        if (*enumerate) {
            EnumerationOptions o;
            o.connected_only = connected;
            o.outerplanar_only = !all_graphs;
            o.threads = g.threads;
            o.max_candidates = max_candidates;
            o.allow_large = allow_large || g.budget == "large";
            if (!resume.empty()) o.resume_from = resume_index(resume);
            EnumerationResult r;
            int code = 0;
            try {
                r = enumerate_graphs(n, o);
            } catch (const enumeration_incomplete& e) {
                r = e.partial;
                code = 3;
                std::cerr << "incomplete; resume with --resume '" << r.resume_token << "'\n";
            }
            std::vector<std::string> lines;
            for (const auto& gr : r.graphs) lines.push_back(graph6_encode(gr));
            write_lines(out_path, lines);
            if (g.json || !out_path.empty())
                std::cerr << json{{"n", n}, {"count", r.graphs.size()}, {"complete", r.complete},
                                  {"resume_token", r.resume_token}}.dump()
                          << "\n";
            return code;
        }
        if (*extremal) {
            SearchOptions o;
            o.threads = g.threads;
            o.allow_large = allow_large || g.budget == "large";
            o.checkpoint = checkpoint;
            o.resume = resume_checkpoint;
            const auto r = extremal_lambda_k(n, k, family, o);
            if (g.json) {
                std::cout << result_json(r).dump(2) << "\n";
            } else {
                std::cout << r.family << " n=" << r.n << " k=" << r.k << " best=" << fixed(r.best)
                          << " candidates=" << r.candidates << "\n";
                for (const auto& s : r.argmax) std::cout << "  argmax " << s << "\n";
                if (!r.best_description.empty()) std::cout << "  " << r.best_description << "\n";
                if (!std::isnan(r.runner_up)) std::cout << "  runner-up " << fixed(r.runner_up) << " gap " << r.gap << "\n";
            }
            return 0;
        }
        if (*conjectures) {
            SearchOptions o;
            o.threads = g.threads;
            o.allow_large = allow_large || g.budget == "large";
            const auto rows = conjecture_suite(kind, max_n, o);
            bool consistent = true;
            json all = json::array();
            for (const auto& r : rows) {
                consistent &= r.status == "CONSISTENT";
                all.push_back({{"kind", r.kind}, {"n", r.n}, {"k", r.k}, {"candidate", r.candidate},
                               {"candidate_value", r.candidate_value}, {"scope", r.scope},
                               {"search_value", r.search_value}, {"search_graph6", r.search_graph6},
                               {"status", r.status}});
                if (!g.json)
                    std::cout << "n=" << r.n << " k=" << r.k << " " << r.candidate << " " << fixed(r.candidate_value)
                              << " | " << r.scope << " " << fixed(r.search_value) << " | " << r.status << "\n";
            }
            if (g.json) std::cout << all.dump(2) << "\n";
            return consistent ? 0 : 1;
        }
        if (*verify) {
            VerifyConfig cfg = config_path.empty() ? VerifyConfig{} : load_config(config_path);
            if (app.count("--budget") || config_path.empty()) cfg.budget = parse_budget(g.budget);
            if (app.count("--threads")) cfg.threads = g.threads;
            if (app.count("--seed")) cfg.seed = g.seed;
            for (const auto& gr : groups) {
                if (std::find(check_groups().begin(), check_groups().end(), gr) == check_groups().end())
                    throw std::invalid_argument("unknown check group '" + gr + "'");
                cfg.groups.insert(gr);
            }
            if (no_timing) cfg.timing = false;
            const auto m = verify_paper(cfg);
            write_lines(json_out, {render_json(m)});
            write_lines(md_out, {render_markdown(m)});
            if (g.json) {
                std::cout << render_json(m);
            } else {
                for (const auto& c : m.checks)
                    std::cout << to_string(c.status) << "  " << c.id << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
                std::cout << "matrix written to " << json_out << " and " << md_out << "\n";
            }
            return m.any_failed() ? 1 : 0;
        }
        if (*report) {
            std::ifstream f(in);
            if (!f) throw std::runtime_error("cannot open " + in);
            const auto m = matrix_from_json(ojson::parse(f));
            std::cout << report_render(m, g.json ? "json" : format);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
