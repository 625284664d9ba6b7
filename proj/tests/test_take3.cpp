#include <doctest.h>

#include <algorithm>
#include <set>

#include "rainbow/contraction.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/skeleton.hpp"
#include "rainbow/take3.hpp"
#include "rainbow/verify.hpp"
#include "test_support.hpp"

using namespace rainbow;

namespace {

struct T3 {
    Graph g;
    InducedForest forest;
    Contraction c;
    Skeleton sk;
    Take3Run run;
};

T3 build_with_forest(const Graph& g, const std::vector<VertexId>& forest_vs) {
    T3 r{g, make_induced_forest(g, forest_vs), {}, {}, {}};
    r.c = contract_forest(r.g, r.forest.vertices);
    r.sk = build_skeleton_take3(r.c);
    r.run = color_take3(r.g, r.forest, r.c, r.sk);
    return r;
}

T3 build_auto(const Graph& g) {
    return build_with_forest(g, max_induced_forest_min_components(g).vertices);
}

void check_construction(const T3& r, bool all_pairs = true) {
    int f = r.forest.f_value();
    const auto& col = r.run.coloring;
    int maxc = 0;
    for (int cc : col.assignment) maxc = std::max(maxc, cc);
    CHECK(col.palette_size == maxc);
    CHECK(col.palette_size <= f + 2);
    CHECK(r.run.forest_size == f);
    CHECK(r.run.tree_count == r.forest.component_count());
    CHECK(verify_rainbow(r.g, col).rainbow_connected);
    if (!all_pairs) return;
    for (VertexId s = 0; s < r.g.vertex_count(); ++s)
        for (VertexId d = 0; d < r.g.vertex_count(); ++d) {
            auto w = take3_witness(r.g, r.c, r.sk, r.run, s, d);
            REQUIRE(!w.vertices.empty());
            CHECK(w.vertices.front() == s);
            CHECK(w.vertices.back() == d);
            CHECK(check_witness(r.g, col, w));
        }
}

bool fired(const T3& r, Rule rule, int case_id = -1) {
    for (const auto& ev : r.run.events)
        if (ev.rule == rule && (case_id < 0 || ev.case_id == case_id)) return true;
    return false;
}

// Path tree 0-1-2-3 ringed by four cycle-closing vertices, each continuing
// down to a singleton tree: the central tree sees four 2-edges.
Graph fan_rotate_fixture() {
    return Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 3},
                                  {0, 4}, {1, 4}, {1, 5}, {2, 5},
                                  {2, 6}, {3, 6}, {0, 7}, {2, 7},
                                  {4, 8}, {5, 9}, {6, 10}, {7, 11}});
}

// Three 2-edges into the central path with pairwise-crossing foot pairs:
// one tree edge separates all of them.
Graph fan_cut_fixture() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3},
                                  {0, 4}, {2, 4}, {1, 5}, {2, 5},
                                  {1, 6}, {3, 6}, {4, 7}, {5, 8}, {6, 9}});
}

// Three 2-edges whose foot paths are disjoint single edges: distinct
// representatives exist.
Graph fan_sdr_fixture() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3},
                                  {0, 4}, {1, 4}, {1, 5}, {2, 5},
                                  {2, 6}, {3, 6}, {4, 7}, {5, 8}, {6, 9}});
}

// Two of the three foot paths are the same single edge and the third is the
// other tree edge: no separating edge and no distinct representatives.
Graph fan_degenerate_fixture() {
    return Graph::from_edges(9, {{0, 1}, {1, 2},
                                 {0, 3}, {1, 3}, {0, 4}, {1, 4},
                                 {1, 5}, {2, 5}, {3, 6}, {4, 7}, {5, 8}});
}

// One non-tree vertex joined to three two-vertex trees by 2-edges.
Graph hub_fixture() {
    return Graph::from_edges(7, {{0, 1}, {2, 3}, {4, 5},
                                 {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
}

// Two 2-edges with distinct overlapping foot paths into a three-vertex tree.
Graph twin_overlap_fixture() {
    return Graph::from_edges(7, {{0, 1}, {1, 2},
                                 {0, 3}, {1, 3}, {0, 4}, {2, 4}, {3, 5}, {4, 6}});
}

// Two 2-edges whose foot paths collapse to the same single tree edge.
Graph twin_shared_fixture() {
    return Graph::from_edges(7, {{0, 1}, {1, 2},
                                 {0, 3}, {1, 3}, {0, 4}, {1, 4}, {3, 5}, {4, 6}});
}

// Single-edge root tree carrying two 2-edges and a 1-edge: the root split.
Graph tiny_root_fixture() {
    return Graph::from_edges(11, {{0, 1},
                                  {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4},
                                  {2, 7}, {2, 8}, {7, 8}, {3, 9}, {3, 10}, {9, 10},
                                  {4, 5}, {4, 6}, {5, 6}});
}

// Single-edge tree under a 2-edge parent, with a second 2-edge below and a
// 1-edge sideways.
Graph tiny_under_two_fixture() {
    return Graph::from_edges(15, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                  {2, 4}, {3, 5},
                                  {0, 6}, {1, 6},
                                  {6, 7}, {6, 8}, {7, 8},
                                  {7, 9}, {8, 9}, {9, 13}, {9, 14}, {13, 14},
                                  {7, 10}, {10, 11}, {10, 12}, {11, 12}});
}

// Single-edge tree whose parent attaches over a 1-edge; both 2-edges hang
// below.
Graph tiny_under_one_fixture() {
    return Graph::from_edges(15, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                  {2, 4}, {3, 5},
                                  {0, 6}, {1, 6},
                                  {6, 7}, {7, 8},
                                  {7, 9}, {8, 9}, {9, 13}, {9, 14}, {13, 14},
                                  {7, 10}, {8, 10}, {10, 11}, {10, 12}, {11, 12}});
}

// Chain of single-edge trees between degree-2 hubs, reachable only through an
// outside-outside edge; the hub pair also shares a direct graph edge.
Graph shortcut_chain_fixture(bool with_shortcut) {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5},
        {0, 6}, {1, 6}, {6, 7},
        {7, 8}, {7, 9}, {8, 9},
        {8, 10}, {9, 10}, {10, 11}, {10, 12}, {11, 12}};
    if (with_shortcut) edges.push_back({7, 10});
    return Graph::from_edges(13, edges);
}

// Four single-edge trees in a line through degree-2 hubs.
Graph linear_chain_fixture() {
    return Graph::from_edges(11, {{0, 1}, {2, 3}, {4, 5}, {6, 7},
                                  {0, 8}, {1, 8}, {2, 8}, {3, 8},
                                  {2, 9}, {3, 9}, {4, 9}, {5, 9},
                                  {4, 10}, {5, 10}, {6, 10}, {7, 10}});
}

}  // namespace

TEST_SUITE("take3") {

TEST_CASE("trees use exactly one color per edge") {
    for (int n = 2; n <= 10; ++n) {
        auto r = build_auto(random_tree(n, 7000 + static_cast<std::uint64_t>(n)));
        CHECK(r.run.coloring.palette_size == n - 1);
        check_construction(r);
    }
}

TEST_CASE("single vertex and tiny cliques") {
    {
        auto r = build_auto(Graph::from_edges(1, {}));
        CHECK(r.run.coloring.palette_size == 0);
    }
    {
        auto r = build_auto(complete_graph(2));
        CHECK(r.run.coloring.palette_size == 1);
        check_construction(r);
    }
    {
        auto r = build_auto(complete_graph(3));
        CHECK(r.forest.f_value() == 2);
        CHECK(r.run.coloring.palette_size <= 4);
        CHECK(fired(r, Rule::global_leaf));
        check_construction(r);
    }
}

TEST_CASE("cycles close with a split leaf edge") {
    for (int n = 3; n <= 10; ++n) {
        auto r = build_auto(cycle_graph(n));
        CHECK(r.forest.f_value() == n - 1);
        CHECK(fired(r, Rule::global_leaf));
        check_construction(r);
    }
}

TEST_CASE("wheels attach the rim hub as a global leaf") {
    for (int rim = 3; rim <= 8; ++rim) {
        auto r = build_auto(wheel_graph(rim));
        CHECK(fired(r, Rule::global_leaf));
        check_construction(r);
    }
}

TEST_CASE("rotating fan at a tree with four 2-edges") {
    auto r = build_with_forest(fan_rotate_fixture(), {0, 1, 2, 3, 8, 9, 10, 11});
    CHECK(fired(r, Rule::fan_rotate));
    CHECK(fired(r, Rule::one_edge));
    check_construction(r);
}

TEST_CASE("fan of three split by one tree edge") {
    auto r = build_with_forest(fan_cut_fixture(), {0, 1, 2, 3, 7, 8, 9});
    CHECK(fired(r, Rule::fan_three, 1));
    check_construction(r);
}

TEST_CASE("fan of three with distinct representatives") {
    auto r = build_with_forest(fan_sdr_fixture(), {0, 1, 2, 3, 7, 8, 9});
    CHECK(fired(r, Rule::fan_three, 2));
    check_construction(r);
}

TEST_CASE("fan of three in the degenerate shape") {
    auto r = build_with_forest(fan_degenerate_fixture(), {0, 1, 2, 6, 7, 8});
    CHECK(fired(r, Rule::fan_three, 3));
    check_construction(r);
}

TEST_CASE("non-tree hub of inner degree three") {
    auto r = build_with_forest(hub_fixture(), {0, 1, 2, 3, 4, 5});
    CHECK(fired(r, Rule::hub));
    check_construction(r);
}

TEST_CASE("twin foot paths with a usable donor pair") {
    auto r = build_with_forest(twin_overlap_fixture(), {0, 1, 2, 5, 6});
    CHECK(fired(r, Rule::twin_foot_paths, 1));
    check_construction(r);
}

TEST_CASE("twin foot paths collapsed onto one edge") {
    auto r = build_with_forest(twin_shared_fixture(), {0, 1, 2, 5, 6});
    CHECK(fired(r, Rule::twin_foot_paths, 2));
    check_construction(r);
}

TEST_CASE("single-edge tree split at the root") {
    auto r = build_with_forest(tiny_root_fixture(), {0, 1, 5, 6, 7, 8, 9, 10});
    CHECK(fired(r, Rule::tiny_tree_hub, 3));
    check_construction(r);
}

TEST_CASE("single-edge tree under a 2-edge parent") {
    auto r = build_with_forest(tiny_under_two_fixture(),
                               {0, 1, 4, 5, 7, 8, 11, 12, 13, 14});
    CHECK(fired(r, Rule::tiny_tree_hub, 2));
    check_construction(r);
}

TEST_CASE("single-edge tree under a 1-edge parent") {
    auto r = build_with_forest(tiny_under_one_fixture(),
                               {0, 1, 4, 5, 7, 8, 11, 12, 13, 14});
    CHECK(fired(r, Rule::tiny_tree_hub, 1));
    check_construction(r);
}

TEST_CASE("chain completion recruits the hub shortcut") {
    auto r = build_with_forest(shortcut_chain_fixture(true),
                               {0, 1, 4, 5, 8, 9, 11, 12});
    CHECK(fired(r, Rule::chain_final, 1));
    REQUIRE(r.run.coloring.shortcut_edges.size() == 1);
    EdgeId sc = r.run.coloring.shortcut_edges[0];
    CHECK(r.g.edge(sc).u == 7);
    CHECK(r.g.edge(sc).v == 10);
    check_construction(r);
}

TEST_CASE("chain completion borrows the surplus below") {
    auto r = build_with_forest(shortcut_chain_fixture(false),
                               {0, 1, 4, 5, 8, 9, 11, 12});
    CHECK(fired(r, Rule::chain_final, 2));
    CHECK(r.run.coloring.shortcut_edges.empty());
    check_construction(r);
}

TEST_CASE("linear chain of single-edge trees") {
    auto r = build_with_forest(linear_chain_fixture(), {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK((fired(r, Rule::chain_two_edge) || fired(r, Rule::chain_root)));
    check_construction(r);
}

TEST_CASE("three-tree chain from the generator") {
    auto r = build_auto(chain_witness_graph());
    CHECK(r.forest.f_value() == 6);
    CHECK(r.forest.component_count() == 3);
    CHECK((fired(r, Rule::chain_root) || fired(r, Rule::chain_two_edge)));
    check_construction(r);
}

TEST_CASE("structured families stay within the strong bound") {
    for (auto g : {petersen_graph(), complete_multipartite({2, 2, 3}),
                   complete_multipartite({3, 3}), complete_with_pendants(3),
                   complete_with_pendants(4), complete_with_pendants(5)}) {
        auto r = build_auto(g);
        check_construction(r);
    }
}

TEST_CASE("random corpus verifies with all-pairs witnesses") {
    int witnessed = 0;
    for (const auto& g : testsupport::random_connected_corpus(60, 2, 12, 7101)) {
        auto r = build_auto(g);
        bool all_pairs = witnessed < 30;  // all-pairs replay on half the corpus
        check_construction(r, all_pairs);
        witnessed += all_pairs ? 1 : 0;
    }
}

TEST_CASE("rule coverage across fixtures and corpus") {
    std::set<Rule> seen;
    auto absorb = [&](const T3& r) {
        for (const auto& ev : r.run.events) seen.insert(ev.rule);
    };
    absorb(build_with_forest(fan_rotate_fixture(), {0, 1, 2, 3, 8, 9, 10, 11}));
    absorb(build_with_forest(fan_cut_fixture(), {0, 1, 2, 3, 7, 8, 9}));
    absorb(build_with_forest(fan_sdr_fixture(), {0, 1, 2, 3, 7, 8, 9}));
    absorb(build_with_forest(fan_degenerate_fixture(), {0, 1, 2, 6, 7, 8}));
    absorb(build_with_forest(hub_fixture(), {0, 1, 2, 3, 4, 5}));
    absorb(build_with_forest(twin_overlap_fixture(), {0, 1, 2, 5, 6}));
    absorb(build_with_forest(twin_shared_fixture(), {0, 1, 2, 5, 6}));
    absorb(build_with_forest(tiny_root_fixture(), {0, 1, 5, 6, 7, 8, 9, 10}));
    absorb(build_with_forest(tiny_under_two_fixture(), {0, 1, 4, 5, 7, 8, 11, 12, 13, 14}));
    absorb(build_with_forest(tiny_under_one_fixture(), {0, 1, 4, 5, 7, 8, 11, 12, 13, 14}));
    absorb(build_with_forest(shortcut_chain_fixture(true), {0, 1, 4, 5, 8, 9, 11, 12}));
    absorb(build_with_forest(shortcut_chain_fixture(false), {0, 1, 4, 5, 8, 9, 11, 12}));
    absorb(build_with_forest(linear_chain_fixture(), {0, 1, 2, 3, 4, 5, 6, 7}));
    absorb(build_auto(cycle_graph(6)));
    absorb(build_auto(wheel_graph(6)));
    for (Rule r : {Rule::one_edge, Rule::fan_rotate, Rule::fan_three, Rule::hub,
                   Rule::solo_two_edge, Rule::twin_foot_paths, Rule::tiny_tree_hub,
                   Rule::chain_final, Rule::global_leaf})
        CHECK_MESSAGE(seen.count(r), "rule never fired: ", rule_name(r));
}

TEST_CASE("deterministic output") {
    auto g = fan_rotate_fixture();
    auto a = build_with_forest(g, {0, 1, 2, 3, 8, 9, 10, 11});
    auto b = build_with_forest(g, {0, 1, 2, 3, 8, 9, 10, 11});
    CHECK(a.run.coloring.assignment == b.run.coloring.assignment);
    CHECK(a.run.coloring.palette_size == b.run.coloring.palette_size);
    CHECK(a.run.events.size() == b.run.events.size());
}

TEST_CASE("forest must match the contraction") {
    auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {1, 4},
                                   {2, 4}, {0, 5}, {1, 5}, {3, 4}, {4, 5}});
    auto forest_a = make_induced_forest(g, {0, 1, 2});
    auto forest_b = make_induced_forest(g, {3, 4, 5});
    auto c = contract_forest(g, forest_a.vertices);
    auto sk = build_skeleton_take3(c);
    CHECK_THROWS_AS(color_take3(g, forest_b, c, sk), PreconditionViolated);
}

TEST_CASE("invariant checks can be switched off") {
    auto g = shortcut_chain_fixture(true);
    Take3Options opts;
    opts.check_invariants = false;
    auto forest = make_induced_forest(g, {0, 1, 4, 5, 8, 9, 11, 12});
    auto c = contract_forest(g, forest.vertices);
    auto sk = build_skeleton_take3(c);
    auto run = color_take3(g, forest, c, sk, opts);
    CHECK(verify_rainbow(g, run.coloring).rainbow_connected);
}

TEST_CASE("witness endpoints coincide") {
    auto r = build_auto(cycle_graph(7));
    auto w = take3_witness(r.g, r.c, r.sk, r.run, 2, 2);
    CHECK(w.vertices == std::vector<VertexId>{2});
    CHECK(w.edges.empty());
}

}  // suite take3
