#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "rainbow/contraction.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/skeleton.hpp"
#include "test_support.hpp"

using namespace rainbow;

namespace {

struct Instance {
    Graph g;
    Contraction c;
};

std::vector<Instance> contracted_corpus(int count, int min_n, int max_n, std::uint64_t seed0) {
    std::vector<Instance> out;
    for (const auto& g : testsupport::random_connected_corpus(count, min_n, max_n, seed0)) {
        auto forest = max_induced_forest_min_components(g);
        auto c = contract_forest(g, forest.vertices);
        out.push_back({g, std::move(c)});
    }
    return out;
}

// Rebuilds <2-edge count, degree sum per level> straight from the skeleton fields.
std::vector<long long> recompute_config(const Contraction& c, const Skeleton& sk) {
    std::vector<long long> vec(static_cast<size_t>(c.h.vertex_count()) + 1, 0);
    std::vector<int> deg(static_cast<size_t>(c.h.vertex_count()), 0);
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!sk.in_b[static_cast<size_t>(e)]) continue;
        ++deg[static_cast<size_t>(c.h.edge(e).u)];
        ++deg[static_cast<size_t>(c.h.edge(e).v)];
        if (c.h_edges[static_cast<size_t>(e)].is_two()) ++vec[0];
    }
    for (int v = 0; v < c.h.vertex_count(); ++v)
        vec[static_cast<size_t>(sk.level[static_cast<size_t>(v)])] += deg[static_cast<size_t>(v)];
    return vec;
}

void check_rooted_tree_shape(const Contraction& c, const Skeleton& sk) {
    const int n = c.h.vertex_count();
    REQUIRE(sk.root >= 0);
    CHECK(c.is_tree_vertex(sk.root));
    CHECK(sk.parent[static_cast<size_t>(sk.root)] == -1);
    CHECK(sk.parent_edge[static_cast<size_t>(sk.root)] == -1);
    CHECK(sk.level[static_cast<size_t>(sk.root)] == 1);
    int b_edges = 0;
    for (EdgeId e = 0; e < c.h.edge_count(); ++e)
        if (sk.in_b[static_cast<size_t>(e)]) ++b_edges;
    CHECK(b_edges == n - 1);
    for (int v = 0; v < n; ++v) {
        if (v == sk.root) continue;
        int p = sk.parent[static_cast<size_t>(v)];
        REQUIRE(p >= 0);
        CHECK(sk.level[static_cast<size_t>(v)] == sk.level[static_cast<size_t>(p)] + 1);
        EdgeId pe = sk.parent_edge[static_cast<size_t>(v)];
        REQUIRE(pe >= 0);
        CHECK(sk.in_b[static_cast<size_t>(pe)]);
        CHECK(c.h.edge_id(v, p) == pe);
        auto& kids = sk.children[static_cast<size_t>(p)];
        CHECK(std::find(kids.begin(), kids.end(), v) != kids.end());
    }
    for (int v = 0; v < n; ++v)
        CHECK(std::is_sorted(sk.children[static_cast<size_t>(v)].begin(),
                             sk.children[static_cast<size_t>(v)].end()));
    // leaf_s holds exactly the non-tree leaves of B, b1 flags are consistent
    for (int v = 0; v < n; ++v) {
        int bdeg = static_cast<int>(sk.children[static_cast<size_t>(v)].size()) +
                   (v == sk.root ? 0 : 1);
        bool leaf_s = bdeg == 1 && !c.is_tree_vertex(v);
        CHECK(static_cast<bool>(sk.in_leaf_s[static_cast<size_t>(v)]) == leaf_s);
        if (leaf_s) CHECK(sk.b1_degree[static_cast<size_t>(v)] == 0);
    }
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        bool expect_b1 = sk.in_b[static_cast<size_t>(e)] &&
                         !sk.in_leaf_s[static_cast<size_t>(c.h.edge(e).u)] &&
                         !sk.in_leaf_s[static_cast<size_t>(c.h.edge(e).v)];
        CHECK(static_cast<bool>(sk.b1_edge[static_cast<size_t>(e)]) == expect_b1);
    }
    CHECK(recompute_config(c, sk) == sk.config_vector);
    CHECK(sk.config_vector[0] == sk.two_edge_count);
}

}  // namespace

TEST_SUITE("skeleton") {

TEST_CASE("greedy skeleton is a valid rooted spanning tree") {
    for (const auto& [g, c] : contracted_corpus(30, 4, 12, 2101)) {
        auto sk = build_skeleton_take2(c);
        check_rooted_tree_shape(c, sk);
        CHECK(sk.root == 0);
        CHECK_NOTHROW(validate_skeleton(c, sk));
    }
}

TEST_CASE("greedy skeleton maximizes the number of 2-edges") {
    int compared = 0;
    for (const auto& [g, c] : contracted_corpus(30, 4, 11, 2201)) {
        if (c.h.vertex_count() > 9) continue;
        std::vector<long long> ex;
        try {
            ex = exhaustive_lex_config_vector(c);
        } catch (const InstanceTooLarge&) {
            continue;
        }
        CHECK(build_skeleton_take2(c).two_edge_count == ex[0]);
        ++compared;
    }
    CHECK(compared >= 15);
}

TEST_CASE("exchange skeleton validates and matches the exhaustive 2-edge count") {
    int compared = 0;
    for (const auto& [g, c] : contracted_corpus(30, 4, 11, 2301)) {
        auto sk = build_skeleton_take3(c);
        check_rooted_tree_shape(c, sk);
        CHECK_NOTHROW(validate_skeleton(c, sk));
        if (c.h.vertex_count() > 9) continue;
        std::vector<long long> ex;
        try {
            ex = exhaustive_lex_config_vector(c);
        } catch (const InstanceTooLarge&) {
            continue;
        }
        CHECK(sk.config_vector[0] == ex[0]);
        // the exchange result never beats the global optimum
        CHECK(!(ex < sk.config_vector));
        ++compared;
    }
    CHECK(compared >= 15);
}

TEST_CASE("star contraction puts every outside vertex in leaf_s") {
    auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {1, 4},
                                   {2, 4}, {0, 5}, {1, 5}, {3, 4}, {4, 5}});
    auto c = contract_forest(g, {0, 1, 2});
    auto sk = build_skeleton_take3(c);
    check_rooted_tree_shape(c, sk);
    CHECK(sk.root == 0);
    CHECK(sk.two_edge_count == 3);
    CHECK(sk.leaf_s == std::vector<int>{1, 2, 3});
    CHECK(sk.b1_degree[0] == 0);

    CHECK_THROWS_AS(subtree_st(c, sk, 0, 1), VertexNotInB1);
    CHECK_THROWS_AS(subtree_st(c, sk, 0, 0), InvalidParams);
}

TEST_CASE("subtree splits and closest tree vertices on the chain fixture") {
    auto g = chain_witness_graph();
    auto c = contract_forest(g, {0, 1, 2, 3, 4, 5});
    REQUIRE(c.h.edge_count() == 4);  // H is already a tree here
    auto sk = build_skeleton_take3(c);
    check_rooted_tree_shape(c, sk);
    CHECK(sk.two_edge_count == 4);
    CHECK(sk.leaf_s.empty());

    CHECK(subtree_st(c, sk, 3, 0) == std::vector<int>{0, 2, 4});
    CHECK(subtree_st(c, sk, 3, 1) == std::vector<int>{1});
    CHECK(subtree_st(c, sk, 0, 3) == std::vector<int>{1, 3});
    CHECK(subtree_st(c, sk, 0, 4) == std::vector<int>{2, 4});
    CHECK(closest_tree_vertex_ct(c, sk, 3, 0) == 0);
    CHECK(closest_tree_vertex_ct(c, sk, 0, 3) == 1);
    CHECK(closest_tree_vertex_ct(c, sk, 0, 4) == 2);
    CHECK(closest_tree_vertex_ct(c, sk, 1, 3) == 0);
}

TEST_CASE("subtree split partitions the inner skeleton on random instances") {
    for (const auto& [g, c] : contracted_corpus(15, 5, 11, 2401)) {
        auto sk = build_skeleton_take3(c);
        std::vector<int> b1_vertices;
        for (int v = 0; v < c.h.vertex_count(); ++v)
            if (sk.in_b1_vertex(v)) b1_vertices.push_back(v);
        for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
            if (!sk.b1_edge[static_cast<size_t>(e)]) continue;
            int u = c.h.edge(e).u, v = c.h.edge(e).v;
            auto side_v = subtree_st(c, sk, u, v);
            auto side_u = subtree_st(c, sk, v, u);
            std::vector<int> both;
            std::merge(side_v.begin(), side_v.end(), side_u.begin(), side_u.end(),
                       std::back_inserter(both));
            CHECK(both == b1_vertices);
            CHECK(std::find(side_v.begin(), side_v.end(), v) != side_v.end());
            CHECK(std::find(side_u.begin(), side_u.end(), u) != side_u.end());
            int ct = closest_tree_vertex_ct(c, sk, u, v);
            CHECK(c.is_tree_vertex(ct));
            CHECK(std::find(side_v.begin(), side_v.end(), ct) != side_v.end());
        }
    }
}

TEST_CASE("contraction without a tree vertex is rejected") {
    Contraction c;
    c.h = Graph::from_edges(2, {{0, 1}});
    c.tree_count = 0;
    c.outside = {0, 1};
    c.h_of_vertex = {0, 1};
    c.h_edges.push_back(HEdge{0, 1, HEdge::Kind::outside_outside, 0, -1});
    CHECK_THROWS_AS(build_skeleton_take2(c), NoTreeVertex);
    CHECK_THROWS_AS(build_skeleton_take3(c), NoTreeVertex);
}

TEST_CASE("exhaustive scan refuses oversized contractions") {
    auto g = chain_witness_graph();
    auto c = contract_forest(g, {0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(exhaustive_lex_config_vector(c, 3), InstanceTooLarge);
    CHECK_NOTHROW(exhaustive_lex_config_vector(c));
}

}  // suite skeleton
