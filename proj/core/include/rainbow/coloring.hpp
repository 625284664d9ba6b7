#ifndef RAINBOW_COLORING_HPP
#define RAINBOW_COLORING_HPP

#include <map>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Provenance tag: which step assigned an edge its color.
enum class Rule {
    none,
    spanning_tree,   // take 1: spanning tree of the dominating set
    dom_first,       // take 1: edge to the first dominating neighbor
    dom_second,      // take 1: edge to the second dominating neighbor
    forest,          // forest-internal edge, distinct color
    b1_two_edge,     // take 2: skeleton edge colored via the foot-path donor
    b1_surplus,      // take 2: skeleton edge colored with a surplus color
    global_leaf,     // leaf vertex attachment, global color pair
    one_edge,        // take 3: single-representative skeleton edge
    fan_rotate,      // take 3: tree vertex with >= 4 incident 2-edges
    fan_three,       // take 3: tree vertex with exactly 3 incident 2-edges
    hub,             // take 3: non-tree vertex of skeleton degree >= 3
    solo_two_edge,   // take 3: tree vertex with a single incident 2-edge
    twin_foot_paths, // take 3: two 2-edges into a tree with >= 2 edges
    tiny_tree_hub,   // take 3: single-edge tree on a degree >= 3 tree vertex
    last_uncolored,  // take 3: the one remaining 2-edge at a tree vertex
    chain_two_edge,  // take 3: chain completion under a 2-edge parent
    chain_final,     // take 3: final chain completion (may add a shortcut)
    chain_root,      // take 3: chain completion at the skeleton root
    filler           // irrelevant edge, arbitrary color
};

std::string rule_name(Rule r);

/// Total edge coloring with palette 1..palette_size.
struct RainbowColoring {
    int palette_size = 0;
    std::vector<int> assignment;   // by EdgeId, values in 1..palette_size (empty graph: none)
    std::vector<bool> relevant;    // true when the construction relies on this edge's color
    std::vector<Rule> provenance;  // by EdgeId
    /// Trees that donated an internal color to their outgoing 2-edge: tree index -> edge.
    std::map<int, EdgeId> color_giving_edge;
    /// Extra non-skeleton edges the strongest construction may recruit (take 3 only).
    std::vector<EdgeId> shortcut_edges;

    int color(EdgeId e) const { return assignment[static_cast<size_t>(e)]; }
    int colors_used() const;
};

/// A vertex sequence whose consecutive edges exist and carry pairwise distinct colors.
struct WitnessPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::vector<int> colors;
};

}  // namespace rainbow

#endif
