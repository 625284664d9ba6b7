#include <doctest.h>

#include <algorithm>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "test_support.hpp"

using namespace rainbow;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        d.push_back(static_cast<int>(g.neighbors(v).size()));
    return d;
}

}  // namespace

TEST_SUITE_BEGIN("generators");

TEST_CASE("fixed families have the right shape") {
    auto p = path_graph(7);
    CHECK(p.vertex_count() == 7);
    CHECK(p.edge_count() == 6);
    CHECK(diameter(p) == 6);

    auto c = cycle_graph(5);
    CHECK(c.edge_count() == 5);
    auto cd = degree_sequence(c);
    CHECK(std::all_of(cd.begin(), cd.end(), [](int d) { return d == 2; }));

    auto k = complete_graph(6);
    CHECK(k.edge_count() == 15);
    CHECK(diameter(k) == 1);

    auto w = wheel_graph(5);
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 10);
    CHECK(static_cast<int>(w.neighbors(0).size()) == 5);
    for (VertexId v = 1; v <= 5; ++v) CHECK(static_cast<int>(w.neighbors(v).size()) == 3);

    auto single = path_graph(1);
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
}

TEST_CASE("complete multipartite graphs join exactly the cross pairs") {
    auto g = complete_multipartite({2, 3});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK_FALSE(g.edge_between(0, 1).has_value());
    CHECK_FALSE(g.edge_between(2, 3).has_value());
    CHECK(g.edge_between(0, 2).has_value());

    auto k33 = complete_multipartite({3, 3});
    CHECK(k33.edge_count() == 9);
    auto deg = degree_sequence(k33);
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; }));

    auto k222 = complete_multipartite({2, 2, 2});
    CHECK(k222.edge_count() == 12);
}

TEST_CASE("petersen graph is the 3-regular diameter-2 classic") {
    auto g = petersen_graph();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    auto deg = degree_sequence(g);
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; }));
    CHECK(diameter(g) == 2);
    CHECK(is_connected(g));
}

TEST_CASE("chain witness graph matches its documented layout") {
    auto g = chain_witness_graph();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 11);
    CHECK(is_connected(g));
    CHECK(is_induced_forest(g, {0, 1, 2, 3, 4, 5}));
    CHECK(static_cast<int>(g.neighbors(6).size()) == 4);
    CHECK(static_cast<int>(g.neighbors(7).size()) == 4);
}

TEST_CASE("complete_with_pendants counts vertices and edges") {
    auto g = complete_with_pendants(4);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 6 + 4);
    for (VertexId v = 4; v < 8; ++v) CHECK(static_cast<int>(g.neighbors(v).size()) == 1);

    auto h = complete_with_pendants(3, 2);
    CHECK(h.vertex_count() == 9);
    CHECK(h.edge_count() == 3 + 6);
}

TEST_CASE("random_tree is a deterministic spanning tree") {
    for (int n = 1; n <= 12; ++n) {
        auto g = random_tree(n, 6100 + n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n - 1);
        CHECK(is_connected(g));
    }
    auto a = random_tree(9, 42);
    auto b = random_tree(9, 42);
    REQUIRE(a.edge_count() == b.edge_count());
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).u == b.edge(e).u);
        CHECK(a.edge(e).v == b.edge(e).v);
    }
    auto c = random_tree(9, 43);
    bool differs = c.edge_count() != a.edge_count();
    for (EdgeId e = 0; !differs && e < a.edge_count(); ++e)
        differs = a.edge(e).u != c.edge(e).u || a.edge(e).v != c.edge(e).v;
    CHECK(differs);
}

TEST_CASE("erdos_renyi_connected always comes back connected") {
    for (int i = 0; i < 20; ++i) {
        int n = 2 + i % 9;
        double p = (i % 2 == 0) ? 0.15 : 0.5;
        auto g = erdos_renyi_connected(n, p, 6200 + i);
        CHECK(g.vertex_count() == n);
        CHECK(is_connected(g));
    }
    auto a = erdos_renyi_connected(8, 0.3, 99);
    auto b = erdos_renyi_connected(8, 0.3, 99);
    REQUIRE(a.edge_count() == b.edge_count());
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).u == b.edge(e).u);
        CHECK(a.edge(e).v == b.edge(e).v);
    }
}

TEST_CASE("generators validate their parameters") {
    CHECK_THROWS_AS(path_graph(0), InvalidParams);
    CHECK_THROWS_AS(cycle_graph(2), InvalidParams);
    CHECK_THROWS_AS(complete_graph(0), InvalidParams);
    CHECK_THROWS_AS(complete_multipartite({}), InvalidParams);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), InvalidParams);
    CHECK_THROWS_AS(wheel_graph(2), InvalidParams);
    CHECK_THROWS_AS(random_tree(0, 1), InvalidParams);
    CHECK_THROWS_AS(complete_with_pendants(0), InvalidParams);
    CHECK_THROWS_AS(complete_with_pendants(2, -1), InvalidParams);
    CHECK_THROWS_AS(erdos_renyi_connected(0, 0.5, 1), InvalidParams);
    CHECK_THROWS_AS(erdos_renyi_connected(5, 1.5, 1), InvalidParams);
    CHECK_THROWS_AS(erdos_renyi_connected(5, 0.5, 1, 0), InvalidParams);
}

TEST_SUITE_END();
