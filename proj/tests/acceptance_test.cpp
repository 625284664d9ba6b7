// Acceptance gate: every release-blocking guarantee as one pass/fail line.
// Exit status 0 only when every criterion holds within its time limit.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/contraction.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/skeleton.hpp"
#include "rainbow/take3.hpp"
#include "rainbow/verify.hpp"
#include "test_support.hpp"

using namespace rainbow;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* label;
    double limit_seconds;  // 0 = no limit stated
    std::function<Outcome(const std::vector<Graph>&)> run;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

HarnessOptions strict_take3() {
    HarnessOptions opts;
    opts.method = Method::take3;
    opts.allow_fallback = false;
    return opts;
}

// take3 stays within f + 2 colors and verifies on every corpus instance.
Outcome run_c1(const std::vector<Graph>& corpus) {
    int ok = 0;
    for (const auto& g : corpus) {
        auto con = build_construction(g, strict_take3());
        int f = con.forest.f_value();
        if (con.coloring.palette_size > f + 2)
            return fail("palette " + std::to_string(con.coloring.palette_size) + " above f+2 on n=" +
                        std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()));
        if (!verify_rainbow(g, con.coloring).rainbow_connected)
            return fail("coloring not rainbow-connected on n=" + std::to_string(g.vertex_count()));
        ++ok;
    }
    return pass(std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                " take3 colorings within f+2 and verified");
}

// take1 and take2 stay within their weaker bounds on the same corpus.
Outcome run_c2(const std::vector<Graph>& corpus) {
    int ok = 0;
    for (const auto& g : corpus) {
        for (Method m : {Method::take1, Method::take2}) {
            HarnessOptions opts;
            opts.method = m;
            auto con = build_construction(g, opts);
            int f = con.forest.f_value();
            int bound = m == Method::take1 ? std::max(1, 3 * f - 1) : 2 * f + 2;
            if (con.coloring.palette_size > bound)
                return fail(std::string(method_name(m)) + " palette " +
                            std::to_string(con.coloring.palette_size) + " above " +
                            std::to_string(bound));
            if (!verify_rainbow(g, con.coloring).rainbow_connected)
                return fail(std::string(method_name(m)) + " coloring not rainbow-connected");
        }
        ++ok;
    }
    return pass(std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                " instances within 3f-1 and 2f+2, all verified");
}

// Exact baselines: complete graphs need one color, trees need every edge distinct.
Outcome run_c3(const std::vector<Graph>&) {
    for (int n = 3; n <= 6; ++n)
        if (rc_exact(complete_graph(n)) != 1)
            return fail("rc_exact(K_" + std::to_string(n) + ") != 1");
    for (int n = 2; n <= 10; ++n) {
        auto g = random_tree(n, 9300 + n);
        auto con = build_construction(g, strict_take3());
        if (con.coloring.palette_size != n - 1)
            return fail("take3 used " + std::to_string(con.coloring.palette_size) +
                        " colors on a tree with " + std::to_string(n - 1) + " edges");
        if (!verify_rainbow(g, con.coloring).rainbow_connected)
            return fail("tree coloring not rainbow-connected at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 11; ++n) {
        auto g = random_tree(n, 9350 + n);
        if (rc_exact(g) != g.edge_count())
            return fail("rc_exact on a tree with " + std::to_string(g.edge_count()) +
                        " edges is not the edge count");
    }
    return pass("K_3..K_6 at 1 color, take3 exact on trees to n=10, rc_exact exact to m=10");
}

// Pendant cliques: exact value for k=3,4; diameter/f+2 bracket for k=5,6.
Outcome run_c4(const std::vector<Graph>&) {
    for (int k = 3; k <= 4; ++k) {
        auto g = complete_with_pendants(k);
        if (rc_exact(g) != k)
            return fail("rc_exact(pendant clique k=" + std::to_string(k) + ") != k");
        if (max_induced_tree_size(g) != 4)
            return fail("t(pendant clique k=" + std::to_string(k) + ") != 4");
    }
    for (int k = 5; k <= 6; ++k) {
        auto g = complete_with_pendants(k);
        if (rc_lower_bound(g) != 3)
            return fail("diameter of pendant clique k=" + std::to_string(k) + " is not 3");
        auto con = build_construction(g, strict_take3());
        int f = con.forest.f_value();
        if (con.coloring.palette_size > f + 2)
            return fail("take3 above f+2 on pendant clique k=" + std::to_string(k));
        if (!verify_rainbow(g, con.coloring).rainbow_connected)
            return fail("pendant clique coloring not rainbow-connected at k=" + std::to_string(k));
        if (max_induced_tree_size(g) != 4)
            return fail("t(pendant clique k=" + std::to_string(k) + ") != 4");
    }
    return pass("k=3,4 exact at k colors; k=5,6 bracketed by diameter 3 and f+2, t=4 throughout");
}

// Local-search skeletons match the exhaustive optimum and always validate.
Outcome run_c5(const std::vector<Graph>& corpus) {
    int compared = 0;
    auto small = testsupport::random_connected_corpus(150, 4, 10, 9501);
    for (const auto& g : small) {
        auto forest = max_induced_forest_min_components(g);
        auto c = contract_forest(g, forest.vertices);
        std::vector<long long> best;
        try {
            best = exhaustive_lex_config_vector(c);
        } catch (const InstanceTooLarge&) {
            continue;
        }
        auto sk = build_skeleton_take3(c);
        if (sk.config_vector.empty() || best.empty() || sk.config_vector[0] != best[0])
            return fail("local search missed the maximum 2-edge count on n=" +
                        std::to_string(g.vertex_count()));
        ++compared;
    }
    if (compared < 50)
        return fail("only " + std::to_string(compared) + " exhaustive comparisons completed");
    int validated = 0;
    for (const auto& g : corpus) {
        auto forest = max_induced_forest_min_components(g);
        auto c = contract_forest(g, forest.vertices);
        validate_skeleton(c, build_skeleton_take2(c));
        validate_skeleton(c, build_skeleton_take3(c));
        validated += 2;
    }
    return pass(std::to_string(compared) + " exhaustive matches, " + std::to_string(validated) +
                " skeletons validated");
}

// Path-rule invariants hold throughout, and every pair gets a checkable witness.
Outcome run_c6(const std::vector<Graph>& corpus) {
    long long paths = 0;
    for (const auto& g : corpus) {
        HarnessOptions opts = strict_take3();
        opts.check_invariants = true;
        auto con = build_construction(g, opts);
        if (con.used != Method::take3) return fail("construction did not run take3");
        for (VertexId a = 0; a < g.vertex_count(); ++a)
            for (VertexId b = 0; b < g.vertex_count(); ++b) {
                if (a == b) continue;
                auto w = con.witness(a, b);
                if (w.vertices.empty() || w.vertices.front() != a || w.vertices.back() != b ||
                    !check_witness(g, con.coloring, w))
                    return fail("witness " + std::to_string(a) + ".." + std::to_string(b) +
                                " failed on n=" + std::to_string(g.vertex_count()));
                ++paths;
            }
    }
    return pass(std::to_string(corpus.size()) + " instances with rule invariants on, " +
                std::to_string(paths) + " witness paths checked");
}

// The two forest-number routes agree, and canonical pruning is lossless.
Outcome run_c7(const std::vector<Graph>& corpus) {
    for (const auto& g : corpus)
        if (forest_number_via_fvs(g) != max_induced_forest(g).f_value())
            return fail("forest number mismatch on n=" + std::to_string(g.vertex_count()));
    int compared = 0;
    auto small = testsupport::random_connected_corpus(60, 3, 6, 9701);
    RcExactOptions plain;
    plain.canonical = false;
    for (const auto& g : small) {
        if (g.edge_count() > 8) continue;
        if (rc_exact(g) != rc_exact(g, plain))
            return fail("canonical search disagrees on n=" + std::to_string(g.vertex_count()) +
                        " m=" + std::to_string(g.edge_count()));
        ++compared;
    }
    if (compared < 30) return fail("only " + std::to_string(compared) + " rc comparisons ran");
    return pass("forest numbers agree on all " + std::to_string(corpus.size()) + ", " +
                std::to_string(compared) + " canonical/unpruned matches");
}

// Palette identity: the complement of a minimum feedback vertex set plus two.
Outcome run_c8(const std::vector<Graph>& corpus) {
    for (const auto& g : corpus) {
        int via_fvs = forest_number_via_fvs(g);
        int f = max_induced_forest(g).f_value();
        if (via_fvs + 2 != f + 2)
            return fail("n - fvs + 2 != f + 2 on n=" + std::to_string(g.vertex_count()));
    }
    return pass("n - fvs + 2 == f + 2 on all " + std::to_string(corpus.size()) + " instances");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "take3 within f+2, fully verified", 600, run_c1},
        {2, "take1/take2 within 3f-1 and 2f+2", 300, run_c2},
        {3, "exact baselines on cliques and trees", 60, run_c3},
        {4, "pendant cliques pinned or bracketed", 120, run_c4},
        {5, "skeleton local search vs exhaustive", 300, run_c5},
        {6, "rule invariants and witness paths", 0, run_c6},
        {7, "forest-number agreement, lossless pruning", 300, run_c7},
        {8, "palette identity via feedback vertex sets", 0, run_c8},
    };

    auto corpus = testsupport::random_connected_corpus(208, 2, 14, 9001);
    int failures = 0;
    for (const auto& cr : criteria) {
        Outcome out;
        auto t0 = std::chrono::steady_clock::now();
        try {
            out = cr.run(corpus);
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.pass && cr.limit_seconds > 0 && secs > cr.limit_seconds)
            out = fail("exceeded " + std::to_string(cr.limit_seconds) + "s limit");
        if (!out.pass) ++failures;
        std::printf("criterion %d: %s - %s - %s (%.2fs)\n", cr.id, out.pass ? "PASS" : "FAIL",
                    cr.label, out.detail.c_str(), secs);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}
