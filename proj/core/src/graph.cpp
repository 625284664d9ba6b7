#include "rainbow/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace rainbow {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidParams("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(static_cast<size_t>(n));
    g.inc_.resize(static_cast<size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidParams("edge endpoint out of range: " + std::to_string(a) + "," + std::to_string(b));
        if (a == b) throw InvalidParams("self-loop at vertex " + std::to_string(a));
        int u = std::min(a, b), v = std::max(a, b);
        if (!seen.insert({u, v}).second)
            throw InvalidParams("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
        g.inc_[static_cast<size_t>(u)].push_back({v, id});
        g.inc_[static_cast<size_t>(v)].push_back({u, id});
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    for (auto& a : g.inc_) std::sort(a.begin(), a.end());
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v < 0 || v >= n_) throw InvalidParams("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& lst = inc_[static_cast<size_t>(u)];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::pair<VertexId, EdgeId>{v, -1});
    if (it != lst.end() && it->first == v) return it->second;
    return std::nullopt;
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
    auto e = edge_between(u, v);
    if (!e) throw InvalidParams("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return *e;
}

TreePath TreePath::reversed() const {
    TreePath r;
    r.vertices.assign(vertices.rbegin(), vertices.rend());
    r.edges.assign(edges.rbegin(), edges.rend());
    return r;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

namespace {

std::vector<int> bfs_dist(const Graph& g, VertexId s) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<VertexId> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

int diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw InvalidParams("diameter of the empty graph is undefined");
    int best = 0;
    for (VertexId s = 0; s < n; ++s) {
        auto dist = bfs_dist(g, s);
        for (int d : dist) {
            if (d < 0) throw DisconnectedGraph("diameter requires a connected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

TreePath tree_path(const Graph& g, const std::vector<VertexId>& tree_vertices, VertexId u, VertexId v) {
    std::vector<char> in_tree(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId x : tree_vertices) {
        if (x < 0 || x >= g.vertex_count()) throw InvalidParams("tree vertex out of range");
        if (in_tree[static_cast<size_t>(x)]) throw InvalidParams("duplicate tree vertex");
        in_tree[static_cast<size_t>(x)] = 1;
    }
    if (tree_vertices.empty()) throw NotATree("empty vertex set");
    if (!in_tree[static_cast<size_t>(u)]) throw VertexOutsideTree("vertex " + std::to_string(u));
    if (!in_tree[static_cast<size_t>(v)]) throw VertexOutsideTree("vertex " + std::to_string(v));

    // BFS from u within the set; count reached vertices and induced edges to verify tree-ness.
    std::vector<VertexId> parent(static_cast<size_t>(g.vertex_count()), -2);
    std::queue<VertexId> q;
    parent[static_cast<size_t>(u)] = -1;
    q.push(u);
    int reached = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId w : g.neighbors(x))
            if (in_tree[static_cast<size_t>(w)] && parent[static_cast<size_t>(w)] == -2) {
                parent[static_cast<size_t>(w)] = x;
                ++reached;
                q.push(w);
            }
    }
    long edges_inside = 0;
    for (VertexId x : tree_vertices)
        for (VertexId w : g.neighbors(x))
            if (in_tree[static_cast<size_t>(w)]) ++edges_inside;
    edges_inside /= 2;
    if (reached != static_cast<int>(tree_vertices.size()) ||
        edges_inside != static_cast<long>(tree_vertices.size()) - 1)
        throw NotATree("induced subgraph is not a tree");

    TreePath p;
    for (VertexId x = v; x != -1; x = parent[static_cast<size_t>(x)]) p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
        p.edges.push_back(g.edge_id(p.vertices[i], p.vertices[i + 1]));
    return p;
}

TreePath path_avoiding_edge(const Graph& g, const std::vector<VertexId>& tree_vertices,
                            VertexId v1, VertexId v2, VertexId v3, EdgeId e) {
    TreePath p23 = tree_path(g, tree_vertices, v2, v3);
    if (std::find(p23.edges.begin(), p23.edges.end(), e) == p23.edges.end())
        throw PreconditionViolated("edge not on the v2..v3 path");
    TreePath p12 = tree_path(g, tree_vertices, v1, v2);
    if (std::find(p12.edges.begin(), p12.edges.end(), e) == p12.edges.end()) return p12;
    TreePath p13 = tree_path(g, tree_vertices, v1, v3);
    if (std::find(p13.edges.begin(), p13.edges.end(), e) != p13.edges.end())
        throw InvariantViolation("both branch paths contain the avoided edge");
    return p13;
}

}  // namespace rainbow
