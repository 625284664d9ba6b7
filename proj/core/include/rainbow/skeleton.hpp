#ifndef RAINBOW_SKELETON_HPP
#define RAINBOW_SKELETON_HPP

#include <cstdint>
#include <vector>

#include "rainbow/contraction.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Rooted spanning tree B of H, edges directed toward the root. The root is a
/// tree vertex and sits at level 1 (levels count vertices on the root path).
/// leaf_s collects the non-tree leaves of B; removing them leaves the inner
/// skeleton B1 whose edge set is flagged in b1_edge.
struct Skeleton {
    int root = -1;
    std::vector<int> parent;          // by H vertex, -1 at root
    std::vector<EdgeId> parent_edge;  // H edge toward the parent, -1 at root
    std::vector<int> level;           // root = 1
    std::vector<std::vector<int>> children;  // ascending H id
    std::vector<char> in_b;           // by H edge
    int two_edge_count = 0;           // 2-edges of B
    /// Lexicographic objective: <two_edge_count, degree sum at level 1, at
    /// level 2, ...>, padded with zeros to |V(H)|+1 entries.
    std::vector<long long> config_vector;

    std::vector<int> leaf_s;      // non-tree leaves of B, ascending H id
    std::vector<char> in_leaf_s;  // by H vertex
    std::vector<char> b1_edge;    // by H edge: in B and no leaf_s endpoint
    std::vector<int> b1_degree;   // by H vertex, 0 on leaf_s

    bool in_b1_vertex(int hv) const { return !in_leaf_s[static_cast<size_t>(hv)]; }
};

/// Spanning tree with the maximum number of 2-edges (greedy over a 2-edges
/// first edge order, which is exact for this objective), rooted at tree 0.
/// Throws NoTreeVertex when H has no tree vertex.
Skeleton build_skeleton_take2(const Contraction& c);

struct LexSearchOptions {
    /// Accepted improvement cap across all candidate roots.
    std::uint64_t max_moves = 100'000;
};

/// Skeleton approximating the lexicographically largest config_vector over all
/// spanning trees and all tree-vertex roots. Per root, starts from the greedy
/// maximum-2-edge tree and applies first-improvement single exchanges (add a
/// non-tree H edge, drop an edge of the created cycle) until no exchange
/// raises the vector; keeps the best root, ties to the smallest root id.
/// Every single exchange is tried, so single-swap optimality facts hold at the
/// fixpoint. Throws NoTreeVertex; InstanceTooLarge past opts.max_moves.
Skeleton build_skeleton_take3(const Contraction& c, LexSearchOptions opts = {});

/// Globally best config_vector by enumerating every spanning tree and root.
/// Cross-check oracle for small H; throws InstanceTooLarge past the caps.
std::vector<long long> exhaustive_lex_config_vector(const Contraction& c, int max_h_vertices = 9,
                                                    std::uint64_t max_trees = 4'000'000);

/// Structural facts both colorings rely on; throws SkeletonInvariantViolated:
///  - every non-tree H vertex has a 2-edge of B incident on it
///  - the unique B edge at each leaf_s vertex is a 2-edge
///  - every leaf of B1 is a tree vertex
///  - for every 1-edge u->v of B1, u is a tree vertex or has a child joined
///    to u by a 2-edge (that child is then a tree vertex)
void validate_skeleton(const Contraction& c, const Skeleton& b);

/// Vertices of the component of B1 minus u that contains v, sorted by H id.
/// Throws VertexNotInB1 when u or v is a leaf_s vertex, InvalidParams on u==v.
std::vector<int> subtree_st(const Contraction& c, const Skeleton& b, int u, int v);

/// Closest tree vertex to v inside subtree_st(u, v); distance in B1 edges,
/// ties to the smallest H id; v itself when v is a tree vertex.
/// Throws NoTreeVertex when the component has none.
int closest_tree_vertex_ct(const Contraction& c, const Skeleton& b, int u, int v);

}  // namespace rainbow

#endif
