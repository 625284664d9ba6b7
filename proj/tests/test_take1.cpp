#include <doctest.h>

#include <algorithm>
#include <set>

#include "rainbow/errors.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/take1.hpp"
#include "rainbow/verify.hpp"
#include "test_support.hpp"

using namespace rainbow;

TEST_SUITE("take1") {

TEST_CASE("connector structure on random graphs") {
    for (const auto& g : testsupport::random_connected_corpus(30, 2, 12, 3101)) {
        auto forest = max_induced_forest(g);
        auto dc = connect_forest(g, forest);

        std::set<VertexId> dom(dc.dominating.begin(), dc.dominating.end());
        for (VertexId v : forest.vertices) CHECK(dom.count(v));
        CHECK(std::is_sorted(dc.dominating.begin(), dc.dominating.end()));
        CHECK(std::is_sorted(dc.connectors.begin(), dc.connectors.end()));
        std::set<VertexId> in_f(forest.vertices.begin(), forest.vertices.end());
        CHECK(dc.connectors.size() == dom.size() - in_f.size());
        for (VertexId v : dc.connectors) {
            CHECK(dom.count(v));
            CHECK_FALSE(in_f.count(v));
        }
        // at most two connectors per merge
        CHECK(static_cast<int>(dc.connectors.size()) <= 2 * (forest.component_count() - 1));

        // tree_edges span G[D]
        REQUIRE(dc.tree_edges.size() + 1 == dom.size());
        std::set<VertexId> reached;
        if (!dc.dominating.empty()) reached.insert(dc.dominating.front());
        bool grew = true;
        while (grew) {
            grew = false;
            for (EdgeId e : dc.tree_edges) {
                VertexId u = g.edge(e).u, v = g.edge(e).v;
                CHECK(dom.count(u));
                CHECK(dom.count(v));
                if (reached.count(u) && !reached.count(v)) reached.insert(v), grew = true;
                if (reached.count(v) && !reached.count(u)) reached.insert(u), grew = true;
            }
        }
        CHECK(reached.size() == dom.size());

        // every vertex outside D keeps two dominating neighbors
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (dom.count(v)) continue;
            int hits = 0;
            for (VertexId w : g.neighbors(v)) hits += dom.count(w) ? 1 : 0;
            CHECK(hits >= 2);
        }
    }
}

TEST_CASE("rejects a forest that could still grow") {
    auto g = path_graph(3);
    CHECK_THROWS_AS(connect_forest(g, make_induced_forest(g, {0, 1})), ForestNotMaximal);
}

TEST_CASE("palette size rule") {
    {
        auto g = complete_graph(2);  // D = V
        auto dc = connect_forest(g, max_induced_forest(g));
        CHECK(dc.dominating.size() == 2);
        CHECK(color_take1(g, dc).palette_size == 1);
    }
    {
        auto g = cycle_graph(5);  // one vertex stays outside D
        auto dc = connect_forest(g, max_induced_forest(g));
        CHECK(dc.dominating.size() == 4);
        auto col = color_take1(g, dc);
        CHECK(col.palette_size == 5);
        // spanning tree colors are 1..|D|-1, each exactly once
        std::set<int> tree_colors;
        for (EdgeId e : dc.tree_edges) tree_colors.insert(col.color(e));
        CHECK(tree_colors == std::set<int>{1, 2, 3});
    }
}

TEST_CASE("coloring stays within the weak bound and verifies") {
    for (const auto& g : testsupport::random_connected_corpus(40, 2, 12, 3201)) {
        auto forest = max_induced_forest(g);
        auto dc = connect_forest(g, forest);
        auto col = color_take1(g, dc);
        int f = forest.f_value();
        CHECK(col.palette_size <= std::max(1, 3 * f - 1));
        auto report = verify_rainbow(g, col);
        CHECK(report.rainbow_connected);
        CHECK_FALSE(report.failing_pair.has_value());
    }
}

TEST_CASE("verifier verdict matches the exponential oracle") {
    for (const auto& g : testsupport::random_connected_corpus(10, 4, 8, 3301)) {
        auto col = color_take1(g, connect_forest(g, max_induced_forest(g)));
        CHECK(testsupport::oracle_rainbow_connected(g, col.assignment));
    }
}

}  // suite take1
