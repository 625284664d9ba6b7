#include "rainbow/harness.hpp"

#include <chrono>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/take2.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

const char* method_name(Method m) {
    switch (m) {
        case Method::take1: return "take1";
        case Method::take2: return "take2";
        case Method::take3: return "take3";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "take1") return Method::take1;
    if (name == "take2") return Method::take2;
    if (name == "take3") return Method::take3;
    throw InvalidParams("unknown method: " + name);
}

namespace {

InducedForest maximal_forest(const Graph& g, const ForestSolverCaps& caps) {
    if (g.vertex_count() <= caps.exact_max_n) return max_induced_forest(g, caps);
    return heuristic_induced_forest(g);
}

void assert_bound(const RainbowColoring& col, int bound, Method m) {
    if (col.palette_size > bound)
        throw InvariantViolation(std::string(method_name(m)) + " exceeded its palette bound " +
                                 std::to_string(bound) + " with " +
                                 std::to_string(col.palette_size));
}

void build_take1(Construction& out, const Graph& g, const HarnessOptions& opts) {
    out.forest = maximal_forest(g, opts.caps);
    out.connector = connect_forest(g, out.forest);
    out.coloring = color_take1(g, *out.connector);
    out.used = Method::take1;
    out.bound = 3 * out.forest.f_value() - 1;
    assert_bound(out.coloring, out.bound, Method::take1);
}

void build_take2(Construction& out, const Graph& g, const HarnessOptions& opts) {
    out.forest = maximal_forest(g, opts.caps);
    out.contraction = contract_forest(g, out.forest.vertices);
    out.skeleton = build_skeleton_take2(*out.contraction);
    out.coloring = color_take2(g, out.forest, *out.contraction, *out.skeleton);
    out.used = Method::take2;
    out.bound = 2 * out.forest.f_value() + 2;
    assert_bound(out.coloring, out.bound, Method::take2);
}

void build_take3(Construction& out, const Graph& g, const HarnessOptions& opts) {
    out.forest = max_induced_forest_min_components(g, opts.caps);
    out.contraction = contract_forest(g, out.forest.vertices);
    out.skeleton = build_skeleton_take3(*out.contraction, opts.lex);
    Take3Options t3;
    t3.check_invariants = opts.check_invariants;
    out.take3 = color_take3(g, out.forest, *out.contraction, *out.skeleton, t3);
    out.coloring = out.take3->coloring;
    out.used = Method::take3;
    out.bound = out.forest.f_value() + 2;
    assert_bound(out.coloring, out.bound, Method::take3);
}

}  // namespace

Construction build_construction(const Graph& g, HarnessOptions opts) {
    Construction out;
    out.graph = g;
    out.requested = opts.method;
    switch (opts.method) {
        case Method::take1: build_take1(out, g, opts); break;
        case Method::take2: build_take2(out, g, opts); break;
        case Method::take3: {
            std::string reason;
            try {
                build_take3(out, g, opts);
                return out;
            } catch (const LemmaViolation& e) {
                if (!opts.allow_fallback) throw;
                reason = e.check_id;
            } catch (const InstanceTooLarge&) {
                if (!opts.allow_fallback) throw;
                reason = "instance-too-large";
            }
            out = Construction{};
            out.graph = g;
            out.requested = Method::take3;
            out.fell_back = true;
            out.fallback_reason = reason;
            build_take2(out, g, opts);
            break;
        }
    }
    return out;
}

WitnessPath Construction::witness(VertexId src, VertexId dst) const {
    if (used == Method::take3) return take3_witness(graph, *contraction, *skeleton, *take3, src, dst);
    if (used == Method::take2) return take2_witness(graph, *contraction, *skeleton, coloring, src, dst);
    throw InvalidParams("witness queries are not available for take1");
}

ExperimentRecord run_experiment(const Graph& g, const std::string& label, HarnessOptions opts,
                                bool with_verify, bool with_timings) {
    using clock = std::chrono::steady_clock;
    ExperimentRecord r;
    r.label = label;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.diameter = diameter(g);
    r.requested = method_name(opts.method);
    r.timings = with_timings;

    auto t0 = clock::now();
    Construction c = build_construction(g, opts);
    auto t1 = clock::now();
    r.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    r.f = c.forest.f_value();
    r.trees = c.forest.component_count();
    r.used = method_name(c.used);
    r.fell_back = c.fell_back;
    r.fallback_reason = c.fallback_reason;
    r.colors = c.coloring.palette_size;
    r.bound = c.bound;

    if (with_verify) {
        auto t2 = clock::now();
        r.verified = verify_rainbow(g, c.coloring).rainbow_connected;
        auto t3 = clock::now();
        r.verify_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
        r.verify_ran = true;
    }
    return r;
}

std::string record_csv_header(bool timings) {
    std::string h =
        "label,n,m,diameter,f,trees,requested,used,fell_back,fallback_reason,colors,bound,"
        "verify_ran,verified";
    if (timings) h += ",build_ms,verify_ms";
    return h;
}

std::string record_to_csv(const ExperimentRecord& r) {
    std::ostringstream os;
    os << r.label << ',' << r.n << ',' << r.m << ',' << r.diameter << ',' << r.f << ',' << r.trees
       << ',' << r.requested << ',' << r.used << ',' << (r.fell_back ? 1 : 0) << ','
       << r.fallback_reason << ',' << r.colors << ',' << r.bound << ',' << (r.verify_ran ? 1 : 0)
       << ',' << (r.verified ? 1 : 0);
    if (r.timings) os << ',' << r.build_ms << ',' << r.verify_ms;
    return os.str();
}

std::string record_to_text(const ExperimentRecord& r) {
    std::ostringstream os;
    os << r.label << ": n=" << r.n << " m=" << r.m << " diam=" << r.diameter << " f=" << r.f
       << " trees=" << r.trees << " method=" << r.used;
    if (r.fell_back) os << " (fell back from " << r.requested << ": " << r.fallback_reason << ")";
    os << " colors=" << r.colors << " bound=" << r.bound;
    if (r.verify_ran) os << (r.verified ? " verified" : " NOT RAINBOW");
    if (r.timings) os << " build_ms=" << r.build_ms << " verify_ms=" << r.verify_ms;
    return os.str();
}

std::string record_to_json(const ExperimentRecord& r) {
    nlohmann::json j{{"label", r.label},
                     {"n", r.n},
                     {"m", r.m},
                     {"diameter", r.diameter},
                     {"f", r.f},
                     {"trees", r.trees},
                     {"requested", r.requested},
                     {"used", r.used},
                     {"fell_back", r.fell_back},
                     {"fallback_reason", r.fallback_reason},
                     {"colors", r.colors},
                     {"bound", r.bound},
                     {"verify_ran", r.verify_ran},
                     {"verified", r.verified}};
    if (r.timings) {
        j["build_ms"] = r.build_ms;
        j["verify_ms"] = r.verify_ms;
    }
    return j.dump();
}

}  // namespace rainbow
