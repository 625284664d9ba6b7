#ifndef RAINBOW_TAKE1_HPP
#define RAINBOW_TAKE1_HPP

#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Connected dominating set D built from a maximal induced forest plus at most
/// 2(k-1) connector vertices (k = forest components). Every vertex outside D
/// keeps at least two neighbors inside D.
struct DominatingConnector {
    std::vector<VertexId> dominating;  // D, ascending
    std::vector<VertexId> connectors;  // D minus the forest, ascending
    std::vector<EdgeId> tree_edges;    // spanning tree of G[D], ascending edge id
};

/// Merges forest components through at most two outside vertices at a time
/// (a nearest foreign dominating vertex is always within distance 3) until
/// G[D] is connected. Throws ForestNotMaximal when some outside vertex lacks
/// two edges into a single component.
DominatingConnector connect_forest(const Graph& g, const InducedForest& forest);

/// Colors the D spanning tree with distinct colors 1..|D|-1, gives every
/// outside vertex edges of colors |D| and |D|+1 to its two lowest dominating
/// neighbors, and fills the rest with color 1. Palette |D|+1, or |D|-1 when
/// D covers the whole graph.
RainbowColoring color_take1(const Graph& g, const DominatingConnector& dc);

}  // namespace rainbow

#endif
