#ifndef RAINBOW_GRAPH_HPP
#define RAINBOW_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u, v;  // u < v
};

/// Simple undirected graph, immutable after construction.
/// Vertices are 0..n-1; edges carry dense ids 0..m-1 in insertion order.
class Graph {
  public:
    Graph() = default;
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    /// Throws InvalidParams when no such edge exists.
    EdgeId edge_id(VertexId u, VertexId v) const;
    VertexId other_end(EdgeId e, VertexId v) const {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        return ed.u == v ? ed.v : ed.u;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;           // sorted
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc_;  // sorted by neighbor
};

/// Path inside an induced tree: vertices[0..k], edges[i] joins vertices[i],vertices[i+1].
struct TreePath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool trivial() const { return edges.empty(); }
    TreePath reversed() const;
};

bool is_connected(const Graph& g);

/// Longest shortest path; throws DisconnectedGraph.
int diameter(const Graph& g);

/// Unique path between u and v in the tree induced by tree_vertices.
/// Throws NotATree when the induced subgraph is not a tree, VertexOutsideTree
/// when u or v is not listed.
TreePath tree_path(const Graph& g, const std::vector<VertexId>& tree_vertices, VertexId u, VertexId v);

/// Given e on the induced-tree path between v2 and v3, returns whichever of the
/// paths v1..v2, v1..v3 avoids e (at least one always does; the paths from v1
/// branch off before reaching e from at most one side).
/// Throws PreconditionViolated when e is not on the v2..v3 path.
TreePath path_avoiding_edge(const Graph& g, const std::vector<VertexId>& tree_vertices,
                            VertexId v1, VertexId v2, VertexId v3, EdgeId e);

}  // namespace rainbow

#endif
