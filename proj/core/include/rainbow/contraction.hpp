#pragma once

#include <optional>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Edge of the contracted graph H. Tree components of the forest collapse to
/// single H vertices; outside vertices carry over. An edge between an outside
/// vertex and a tree is a one_edge or two_edge depending on how many graph
/// edges it bundles; reps are the bundled graph edges with the lowest ids.
struct HEdge {
    enum class Kind { outside_outside, one_edge, two_edge };
    int a = -1;  // H vertex ids, a < b
    int b = -1;
    Kind kind = Kind::outside_outside;
    EdgeId rep1 = -1;  // lowest bundled graph edge
    EdgeId rep2 = -1;  // second lowest, two_edge only

    bool is_two() const { return kind == Kind::two_edge; }
};

/// Contraction of a maximal induced forest. H vertex ids [0, tree_count) are
/// trees in component order; outside vertices follow in increasing graph id.
struct Contraction {
    Graph h;
    int tree_count = 0;
    std::vector<std::vector<VertexId>> tree_vertices;  // per tree, sorted
    std::vector<VertexId> outside;                     // sorted graph ids
    std::vector<int> h_of_vertex;                      // graph vertex -> H id
    std::vector<HEdge> h_edges;                        // aligned with h.edges()

    bool is_tree_vertex(int hv) const { return hv >= 0 && hv < tree_count; }
    VertexId g_of_outside(int hv) const;
    int tree_of_vertex(VertexId v) const;  // -1 for outside vertices

    /// Endpoint of a bundled graph edge that lies inside the given tree.
    VertexId foot(EdgeId g_edge, int tree, const Graph& g) const;
};

/// Builds H from a maximal induced forest. Throws ForestNotMaximal when some
/// outside vertex has no two_edge into any tree (equivalently, could be added
/// to the forest).
Contraction contract_forest(const Graph& g, const std::vector<VertexId>& forest_vertices);

/// Path inside the tree endpoint of a two_edge between the feet of its reps.
TreePath foot_path(const Graph& g, const Contraction& c, EdgeId h_edge);

}  // namespace rainbow
