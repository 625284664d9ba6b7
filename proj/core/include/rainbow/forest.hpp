#ifndef RAINBOW_FOREST_HPP
#define RAINBOW_FOREST_HPP

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Vertex set inducing an acyclic subgraph, split into its connected components.
/// Components are sorted by smallest contained vertex; vertices inside are sorted.
struct InducedForest {
    std::vector<VertexId> vertices;
    std::vector<std::vector<VertexId>> components;

    int f_value() const { return static_cast<int>(vertices.size()); }
    int component_count() const { return static_cast<int>(components.size()); }
};

struct ForestSolverCaps {
    int exact_max_n = 24;
    int min_components_max_n = 18;
};

bool is_induced_forest(const Graph& g, const std::vector<VertexId>& s);

/// Builds the component decomposition of an induced forest (validates acyclicity).
InducedForest make_induced_forest(const Graph& g, const std::vector<VertexId>& s);

/// Largest vertex set inducing a forest. Branch and bound over include/exclude
/// decisions, include-first, with incremental union-find acyclicity.
/// Throws InstanceTooLarge above caps.exact_max_n.
InducedForest max_induced_forest(const Graph& g, ForestSolverCaps caps = {});

/// Among all maximum induced forests, one with the fewest components
/// (ties: lexicographically smallest vertex set).
InducedForest max_induced_forest_min_components(const Graph& g, ForestSolverCaps caps = {});

/// Maximal (not maximum) induced forest: greedy over a smallest-last degeneracy
/// order, then an augmentation sweep. Linear-ish and uncapped.
InducedForest heuristic_induced_forest(const Graph& g);

/// Second, independent route to the forest number: n minus the smallest vertex
/// set meeting all cycles, found by iterative deepening with branching on a
/// shortest cycle. Must agree with max_induced_forest.
int forest_number_via_fvs(const Graph& g, ForestSolverCaps caps = {});

/// Size of the largest vertex set inducing a (connected) tree.
/// Subset scan with leaf-peeling acyclicity, capped at caps.exact_max_n.
int max_induced_tree_size(const Graph& g, ForestSolverCaps caps = {});

}  // namespace rainbow

#endif
