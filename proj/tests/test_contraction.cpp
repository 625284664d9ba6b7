#include <doctest.h>

#include "rainbow/contraction.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"

using namespace rainbow;

namespace {

// Path 0-1-2 as the only tree; outside vertices 3,4,5 each close a cycle
// through two tree vertices, plus outside-outside edges 3-4 and 4-5.
Graph one_tree_fixture() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {1, 4},
                                 {2, 4}, {0, 5}, {1, 5}, {3, 4}, {4, 5}});
}

}  // namespace

TEST_SUITE("contraction") {

TEST_CASE("single tree fixture collapses as expected") {
    auto g = one_tree_fixture();
    auto c = contract_forest(g, {0, 1, 2});

    CHECK(c.tree_count == 1);
    REQUIRE(c.tree_vertices.size() == 1);
    CHECK(c.tree_vertices[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(c.outside == std::vector<VertexId>{3, 4, 5});
    CHECK(c.h_of_vertex == std::vector<int>{0, 0, 0, 1, 2, 3});
    CHECK(c.is_tree_vertex(0));
    CHECK_FALSE(c.is_tree_vertex(1));
    CHECK(c.g_of_outside(1) == 3);
    CHECK(c.g_of_outside(3) == 5);
    CHECK_THROWS_AS(c.g_of_outside(0), InvalidParams);
    CHECK(c.tree_of_vertex(1) == 0);
    CHECK(c.tree_of_vertex(4) == -1);

    CHECK(c.h.vertex_count() == 4);
    REQUIRE(c.h.edge_count() == 5);
    REQUIRE(c.h_edges.size() == 5);

    // H edges arrive sorted by endpoint pair; reps are the lowest bundled ids.
    auto expect = [&](EdgeId he, int a, int b, HEdge::Kind k, EdgeId r1, EdgeId r2) {
        CHECK(c.h.edge(he).u == a);
        CHECK(c.h.edge(he).v == b);
        CHECK(c.h_edges[static_cast<size_t>(he)].a == a);
        CHECK(c.h_edges[static_cast<size_t>(he)].b == b);
        CHECK(c.h_edges[static_cast<size_t>(he)].kind == k);
        CHECK(c.h_edges[static_cast<size_t>(he)].rep1 == r1);
        CHECK(c.h_edges[static_cast<size_t>(he)].rep2 == r2);
    };
    expect(0, 0, 1, HEdge::Kind::two_edge, 2, 3);
    expect(1, 0, 2, HEdge::Kind::two_edge, 4, 5);
    expect(2, 0, 3, HEdge::Kind::two_edge, 6, 7);
    expect(3, 1, 2, HEdge::Kind::outside_outside, 8, -1);
    expect(4, 2, 3, HEdge::Kind::outside_outside, 9, -1);

    CHECK(c.foot(2, 0, g) == 0);
    CHECK(c.foot(3, 0, g) == 2);
    CHECK(c.foot(5, 0, g) == 2);
    CHECK_THROWS_AS(c.foot(8, 0, g), InvalidParams);

    auto p = foot_path(g, c, 0);
    CHECK(p.vertices == std::vector<VertexId>{0, 1, 2});
    REQUIRE(p.edges.size() == 2);
    auto q = foot_path(g, c, 1);
    CHECK(q.vertices == std::vector<VertexId>{1, 2});
    CHECK_THROWS_AS(foot_path(g, c, 3), InvalidParams);
}

TEST_CASE("three tree fixture keeps component order and never joins trees") {
    auto g = chain_witness_graph();
    auto c = contract_forest(g, {0, 1, 2, 3, 4, 5});

    CHECK(c.tree_count == 3);
    CHECK(c.tree_vertices[0] == std::vector<VertexId>{0, 1});
    CHECK(c.tree_vertices[1] == std::vector<VertexId>{2, 3});
    CHECK(c.tree_vertices[2] == std::vector<VertexId>{4, 5});
    CHECK(c.outside == std::vector<VertexId>{6, 7});
    CHECK(c.h.vertex_count() == 5);
    REQUIRE(c.h.edge_count() == 4);

    for (const HEdge& he : c.h_edges) {
        CHECK(he.kind == HEdge::Kind::two_edge);
        // trees occupy ids < tree_count; no H edge joins two of them
        CHECK_FALSE((c.is_tree_vertex(he.a) && c.is_tree_vertex(he.b)));
    }
    auto expect = [&](EdgeId he, int a, int b, EdgeId r1, EdgeId r2) {
        CHECK(c.h.edge(he).u == a);
        CHECK(c.h.edge(he).v == b);
        CHECK(c.h_edges[static_cast<size_t>(he)].rep1 == r1);
        CHECK(c.h_edges[static_cast<size_t>(he)].rep2 == r2);
    };
    expect(0, 0, 3, 3, 4);
    expect(1, 0, 4, 7, 8);
    expect(2, 1, 3, 5, 6);
    expect(3, 2, 4, 9, 10);
}

TEST_CASE("non-maximal forest is rejected") {
    CHECK_THROWS_AS(contract_forest(path_graph(3), {0, 1}), ForestNotMaximal);
    // an outside vertex with two edges into the same tree is fine
    CHECK_NOTHROW(contract_forest(complete_graph(3), {0, 1}));
}

}  // suite contraction
