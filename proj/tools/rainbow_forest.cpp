// Command-line front end: forest extraction, the three colorings, exhaustive
// verification, exact rc, family generation, and the corpus bench table.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/contraction.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"
#include "rainbow/skeleton.hpp"
#include "rainbow/take3.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// Sniffs JSON, DIMACS, or the native edge-list header; no format flag needed.
Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path + " is empty");
    if (text[first] == '{') return graph_from_json(text);
    bool dimacs = text.compare(first, 6, "p edge") == 0 || text[first] == 'c';
    std::istringstream is(text);
    return read_edge_list(is, dimacs);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void apply_cap(HarnessOptions& opts, int cap_n) {
    if (cap_n <= 0) return;
    opts.caps.exact_max_n = cap_n;
    opts.caps.min_components_max_n = cap_n;
}

nlohmann::json forest_to_json(const InducedForest& f) {
    return {{"vertices", f.vertices},
            {"components", f.components},
            {"f", f.f_value()},
            {"t", f.component_count()}};
}

const char* kind_tag(HEdge::Kind k) {
    switch (k) {
        case HEdge::Kind::two_edge: return "2-edge";
        case HEdge::Kind::one_edge: return "1-edge";
        case HEdge::Kind::outside_outside: return "outside-outside";
    }
    return "?";
}

void dump_h(std::ostream& os, const Contraction& c) {
    os << "H: " << c.h.vertex_count() << " vertices (" << c.tree_count << " trees), "
       << c.h.edge_count() << " edges\n";
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        const auto& he = c.h_edges[static_cast<size_t>(e)];
        os << "  h" << e << ": (" << he.a << "," << he.b << ") " << kind_tag(he.kind)
           << " rep=" << he.rep1;
        if (he.is_two()) os << "," << he.rep2;
        os << "\n";
    }
}

void dump_skeleton(std::ostream& os, const Contraction& c, const Skeleton& sk) {
    os << "B: root=" << sk.root << "\n";
    for (int hv = 0; hv < c.h.vertex_count(); ++hv) {
        os << "  v" << hv << ": level=" << sk.level[static_cast<size_t>(hv)];
        int p = sk.parent[static_cast<size_t>(hv)];
        if (p >= 0) {
            EdgeId pe = sk.parent_edge[static_cast<size_t>(hv)];
            os << " parent=" << p << " via h" << pe << " ("
               << kind_tag(c.h_edges[static_cast<size_t>(pe)].kind) << ")";
        }
        if (sk.in_leaf_s[static_cast<size_t>(hv)]) os << " [leaf_s]";
        os << "\n";
    }
    os << "  config=[";
    for (size_t i = 0; i < sk.config_vector.size(); ++i)
        os << (i ? "," : "") << sk.config_vector[i];
    os << "]\n";
}

void print_trace(std::ostream& os, const Take3Run& run) {
    for (const auto& ev : run.events) {
        os << "rule " << rule_name(ev.rule);
        if (ev.case_id) os << " case " << ev.case_id;
        if (ev.target >= 0) os << " at h-vertex " << ev.target;
        if (ev.h_edge >= 0) os << " edge h" << ev.h_edge;
        if (!ev.spokes.empty()) os << " spokes " << ev.spokes.size();
        if (!ev.donors.empty()) {
            os << " donors";
            for (EdgeId d : ev.donors) os << " e" << d;
        }
        if (ev.shortcut >= 0) os << " shortcut e" << ev.shortcut;
        os << "\n";
    }
}

nlohmann::json witness_to_json(const WitnessPath& w) {
    return {{"vertices", w.vertices}, {"edges", w.edges}, {"colors", w.colors}};
}

int cmd_forest(const std::string& path, bool heuristic, bool min_components, int cap_n) {
    auto g = load_graph(path);
    ForestSolverCaps caps;
    if (cap_n > 0) caps.exact_max_n = caps.min_components_max_n = cap_n;
    InducedForest f = heuristic         ? heuristic_induced_forest(g)
                      : min_components  ? max_induced_forest_min_components(g, caps)
                                        : max_induced_forest(g, caps);
    std::cout << forest_to_json(f).dump(2) << "\n";
    return 0;
}

int cmd_color(const std::string& path, const std::string& method, bool trace, bool want_h,
              bool want_skeleton, bool no_fallback, bool no_checks, int cap_n,
              const std::vector<int>& witness) {
    auto g = load_graph(path);
    HarnessOptions opts;
    opts.method = method_from_name(method);
    opts.allow_fallback = !no_fallback;
    opts.check_invariants = !no_checks;
    apply_cap(opts, cap_n);
    auto con = build_construction(g, opts);
    if (con.fell_back)
        std::cerr << "fell back to " << method_name(con.used) << ": " << con.fallback_reason
                  << "\n";
    if (want_h && con.contraction) dump_h(std::cerr, *con.contraction);
    if (want_skeleton && con.contraction && con.skeleton)
        dump_skeleton(std::cerr, *con.contraction, *con.skeleton);
    if (trace && con.take3) print_trace(std::cerr, *con.take3);
    std::cout << coloring_to_json(g, con.coloring) << "\n";
    if (witness.size() == 2) {
        auto w = con.witness(witness[0], witness[1]);
        std::cout << witness_to_json(w).dump() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, bool paths) {
    auto g = load_graph(graph_path);
    auto c = coloring_from_json(g, read_file(coloring_path));
    VerifyOptions opts;
    opts.collect_paths = paths;
    auto rep = verify_rainbow(g, c, opts);
    nlohmann::json j{{"rainbow_connected", rep.rainbow_connected},
                     {"colors_used", rep.colors_used},
                     {"palette", c.palette_size}};
    if (rep.failing_pair)
        j["failing_pair"] = {rep.failing_pair->first, rep.failing_pair->second};
    if (paths && rep.rainbow_connected) {
        auto arr = nlohmann::json::array();
        for (const auto& [pr, w] : rep.paths) {
            auto pj = witness_to_json(w);
            pj["pair"] = {pr.first, pr.second};
            arr.push_back(std::move(pj));
        }
        j["paths"] = std::move(arr);
    }
    std::cout << j.dump(2) << "\n";
    return rep.rainbow_connected ? 0 : 1;
}

int cmd_rc_exact(const std::string& path, bool no_canonical, int max_edges,
                 std::uint64_t budget) {
    auto g = load_graph(path);
    RcExactOptions opts;
    opts.canonical = !no_canonical;
    if (max_edges > 0) opts.max_edges = max_edges;
    if (budget > 0) opts.coloring_budget = budget;
    int rc = rc_exact(g, opts);
    nlohmann::json j{{"rc", rc}, {"lower_bound", rc_lower_bound(g)}};
    std::cout << j.dump() << "\n";
    return 0;
}

std::vector<int> parse_parts(const std::string& spec) {
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return parts;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, std::uint64_t seed,
            double p, bool as_json, const std::string& out_path) {
    auto arg_at = [&](size_t i) {
        if (i >= args.size()) throw InvalidParams(family + " needs more arguments");
        return std::stoi(args[i]);
    };
    Graph g;
    if (family == "path") g = path_graph(arg_at(0));
    else if (family == "cycle") g = cycle_graph(arg_at(0));
    else if (family == "complete") g = complete_graph(arg_at(0));
    else if (family == "multipartite") {
        if (args.empty()) throw InvalidParams("multipartite needs part sizes a,b,...");
        g = complete_multipartite(parse_parts(args[0]));
    } else if (family == "wheel") g = wheel_graph(arg_at(0));
    else if (family == "tree") g = random_tree(arg_at(0), seed);
    else if (family == "pendants")
        g = complete_with_pendants(arg_at(0), args.size() > 1 ? arg_at(1) : 1);
    else if (family == "er") g = erdos_renyi_connected(arg_at(0), p, seed);
    else if (family == "petersen") g = petersen_graph();
    else if (family == "chain-witness") g = chain_witness_graph();
    else
        throw InvalidParams("unknown family: " + family +
                            " (path cycle complete multipartite wheel tree pendants er petersen "
                            "chain-witness)");
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ParseError("cannot open " + out_path + " for writing");
        os = &file;
    }
    if (as_json) *os << graph_to_json(g) << "\n";
    else write_edge_list(*os, g);
    return 0;
}

int cmd_bench(int count, int min_n, int max_n, std::uint64_t seed, const std::string& method,
              const std::string& format, bool timings, bool no_verify, int cap_n, int jobs) {
    auto corpus = [&] {
        std::vector<Graph> gs;
        const double probs[] = {0.2, 0.3, 0.45, 0.6, 0.8};
        int span = max_n - min_n + 1;
        for (int i = 0; i < count; ++i)
            gs.push_back(erdos_renyi_connected(min_n + i % span, probs[i % 5],
                                               seed + static_cast<std::uint64_t>(i)));
        return gs;
    }();

    std::vector<Method> methods;
    if (method == "all") methods = {Method::take1, Method::take2, Method::take3};
    else methods = {method_from_name(method)};

    struct Job {
        const Graph* g;
        Method m;
        std::string label;
    };
    std::vector<Job> jobs_list;
    for (size_t i = 0; i < corpus.size(); ++i)
        for (Method m : methods)
            jobs_list.push_back({&corpus[i], m,
                                 "er" + std::to_string(i) + "-n" +
                                     std::to_string(corpus[i].vertex_count()) + "-" +
                                     method_name(m)});

    std::vector<ExperimentRecord> records(jobs_list.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs_list.size(); i = next.fetch_add(1)) {
            HarnessOptions opts;
            opts.method = jobs_list[i].m;
            apply_cap(opts, cap_n);
            records[i] = run_experiment(*jobs_list[i].g, jobs_list[i].label, opts, !no_verify,
                                        timings);
        }
    };
    int nthreads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_ok = true;
    if (format == "csv") std::cout << record_csv_header(timings) << "\n";
    for (const auto& r : records) {
        if (format == "csv") std::cout << record_to_csv(r) << "\n";
        else if (format == "json") std::cout << record_to_json(r) << "\n";
        else std::cout << record_to_text(r) << "\n";
        if (r.verify_ran && !r.verified) all_ok = false;
        if (r.colors > r.bound) all_ok = false;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow connection colorings built from maximum induced forests"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, method = "take3", bench_method = "all";
    std::string format = "text", family, out_path;
    std::vector<std::string> gen_args;
    std::vector<int> witness;
    bool heuristic = false, min_components = false, trace = false, want_h = false;
    bool want_skeleton = false, no_fallback = false, no_checks = false, paths = false;
    bool no_canonical = false, timings = false, no_verify = false, as_json = false;
    int cap_n = 0, max_edges = 0, count = 50, min_n = 2, max_n = 12, jobs = 0;
    std::uint64_t seed = 1, budget = 0;
    double er_p = 0.3;

    auto* cf = app.add_subcommand("forest", "maximum induced forest of a graph");
    cf->add_option("graph", graph_path, "graph file (edge list, DIMACS, or JSON)")->required();
    cf->add_flag("--heuristic", heuristic, "maximal forest by greedy deletion");
    cf->add_flag("--exact", "exact solver (default)");
    cf->add_flag("--min-components", min_components, "fewest trees among maximum forests");
    cf->add_option("--cap-n", cap_n, "exact solver vertex cap");

    auto* cc = app.add_subcommand("color", "rainbow coloring of a connected graph");
    cc->add_option("graph", graph_path, "graph file")->required();
    cc->add_option("--method", method, "take1, take2, or take3")
        ->check(CLI::IsMember({"take1", "take2", "take3"}));
    cc->add_option("--witness", witness, "also print a rainbow path between two vertices")
        ->expected(2);
    cc->add_flag("--trace", trace, "stream rule firings to stderr");
    cc->add_flag("--dump-h", want_h, "annotated contraction edge list to stderr");
    cc->add_flag("--dump-skeleton", want_skeleton, "skeleton parent list to stderr");
    cc->add_flag("--no-fallback", no_fallback, "fail instead of retreating to take2");
    cc->add_flag("--no-invariant-checks", no_checks, "skip per-rule invariant assertions");
    cc->add_option("--cap-n", cap_n, "exact solver vertex cap");

    auto* cv = app.add_subcommand("verify", "check a coloring for rainbow connectivity");
    cv->add_option("graph", graph_path, "graph file")->required();
    cv->add_option("coloring", coloring_path, "coloring JSON file")->required();
    cv->add_flag("--paths", paths, "include one rainbow path per pair");

    auto* cr = app.add_subcommand("rc-exact", "exact rainbow connection number");
    cr->add_option("graph", graph_path, "graph file")->required();
    cr->add_flag("--no-canonical", no_canonical, "disable canonical-form pruning");
    cr->add_option("--max-edges", max_edges, "edge cap for the general search");
    cr->add_option("--budget", budget, "complete colorings tested before giving up");

    auto* cg = app.add_subcommand("gen", "write a graph from a named family");
    cg->add_option("family", family, "path cycle complete multipartite wheel tree pendants er "
                                     "petersen chain-witness")
        ->required();
    cg->add_option("args", gen_args, "family parameters");
    cg->add_option("--seed", seed, "seed for random families");
    cg->add_option("--p", er_p, "edge probability for er");
    cg->add_flag("--json", as_json, "JSON output instead of edge list");
    cg->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cb = app.add_subcommand("bench", "bound comparison over a random corpus");
    cb->add_option("--count", count, "number of graphs");
    cb->add_option("--min-n", min_n, "smallest vertex count");
    cb->add_option("--max-n", max_n, "largest vertex count");
    cb->add_option("--seed", seed, "corpus seed");
    cb->add_option("--method", bench_method, "take1, take2, take3, or all")
        ->check(CLI::IsMember({"take1", "take2", "take3", "all"}));
    cb->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cb->add_flag("--timings", timings, "include build and verify times");
    cb->add_flag("--no-verify", no_verify, "skip the exhaustive verifier");
    cb->add_option("--cap-n", cap_n, "exact solver vertex cap");
    cb->add_option("--jobs", jobs, "worker threads (default: hardware)");

    if (app.get_subcommands().empty() && argc == 1) {
        std::cout << app.help();
        return 0;
    }
    CLI11_PARSE(app, argc, argv);

    try {
        if (cf->parsed()) return cmd_forest(graph_path, heuristic, min_components, cap_n);
        if (cc->parsed())
            return cmd_color(graph_path, method, trace, want_h, want_skeleton, no_fallback,
                             no_checks, cap_n, witness);
        if (cv->parsed()) return cmd_verify(graph_path, coloring_path, paths);
        if (cr->parsed()) return cmd_rc_exact(graph_path, no_canonical, max_edges, budget);
        if (cg->parsed()) return cmd_gen(family, gen_args, seed, er_p, as_json, out_path);
        if (cb->parsed())
            return cmd_bench(count, min_n, max_n, seed, bench_method, format, timings, no_verify,
                             cap_n, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
