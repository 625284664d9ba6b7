#include "rainbow/skeleton.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace rainbow {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

/// Spanning tree edge set with the maximum number of 2-edges: greedy over
/// 2-edges first (ascending id), then the rest. Exact for a 0/1 edge weight.
std::vector<char> greedy_max_two(const Contraction& c) {
    const int m = c.h.edge_count();
    std::vector<EdgeId> order;
    order.reserve(static_cast<size_t>(m));
    for (EdgeId e = 0; e < m; ++e)
        if (c.h_edges[static_cast<size_t>(e)].is_two()) order.push_back(e);
    for (EdgeId e = 0; e < m; ++e)
        if (!c.h_edges[static_cast<size_t>(e)].is_two()) order.push_back(e);

    Dsu dsu(c.h.vertex_count());
    std::vector<char> in_b(static_cast<size_t>(m), 0);
    for (EdgeId e : order) {
        const Edge& ed = c.h.edge(e);
        if (dsu.unite(ed.u, ed.v)) in_b[static_cast<size_t>(e)] = 1;
    }
    return in_b;
}

struct Rooted {
    std::vector<int> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<int> level;
};

Rooted root_tree(const Contraction& c, const std::vector<char>& in_b, int root) {
    const int n = c.h.vertex_count();
    std::vector<std::vector<std::pair<int, EdgeId>>> adj(static_cast<size_t>(n));
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!in_b[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        adj[static_cast<size_t>(ed.u)].emplace_back(ed.v, e);
        adj[static_cast<size_t>(ed.v)].emplace_back(ed.u, e);
    }
    Rooted r;
    r.parent.assign(static_cast<size_t>(n), -2);
    r.parent_edge.assign(static_cast<size_t>(n), -1);
    r.level.assign(static_cast<size_t>(n), 0);
    std::queue<int> q;
    r.parent[static_cast<size_t>(root)] = -1;
    r.level[static_cast<size_t>(root)] = 1;
    q.push(root);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (auto [w, e] : adj[static_cast<size_t>(v)]) {
            if (r.parent[static_cast<size_t>(w)] != -2) continue;
            r.parent[static_cast<size_t>(w)] = v;
            r.parent_edge[static_cast<size_t>(w)] = e;
            r.level[static_cast<size_t>(w)] = r.level[static_cast<size_t>(v)] + 1;
            q.push(w);
        }
    }
    if (seen != n) throw InvariantViolation("skeleton edge set does not span H");
    return r;
}

std::vector<long long> config_of(const Contraction& c, const std::vector<char>& in_b,
                                 const Rooted& r) {
    const int n = c.h.vertex_count();
    std::vector<long long> vec(static_cast<size_t>(n) + 1, 0);
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!in_b[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        ++deg[static_cast<size_t>(ed.u)];
        ++deg[static_cast<size_t>(ed.v)];
        if (c.h_edges[static_cast<size_t>(e)].is_two()) ++vec[0];
    }
    for (int v = 0; v < n; ++v) vec[static_cast<size_t>(r.level[static_cast<size_t>(v)])] += deg[static_cast<size_t>(v)];
    return vec;
}

/// Edges of the B path between the endpoints of e_add (the cycle closed by it).
std::vector<EdgeId> cycle_edges(const Contraction& c, const Rooted& r, EdgeId e_add) {
    int a = c.h.edge(e_add).u;
    int b = c.h.edge(e_add).v;
    std::vector<EdgeId> from_a, from_b;
    while (a != b) {
        if (r.level[static_cast<size_t>(a)] >= r.level[static_cast<size_t>(b)]) {
            from_a.push_back(r.parent_edge[static_cast<size_t>(a)]);
            a = r.parent[static_cast<size_t>(a)];
        } else {
            from_b.push_back(r.parent_edge[static_cast<size_t>(b)]);
            b = r.parent[static_cast<size_t>(b)];
        }
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
}

/// First single exchange that lexicographically raises the vector; applies it.
bool improve_once(const Contraction& c, std::vector<char>& in_b, int root,
                  std::vector<long long>& vec) {
    const Rooted r = root_tree(c, in_b, root);
    for (EdgeId e_add = 0; e_add < c.h.edge_count(); ++e_add) {
        if (in_b[static_cast<size_t>(e_add)]) continue;
        for (EdgeId e_del : cycle_edges(c, r, e_add)) {
            in_b[static_cast<size_t>(e_del)] = 0;
            in_b[static_cast<size_t>(e_add)] = 1;
            Rooted cand = root_tree(c, in_b, root);
            std::vector<long long> cand_vec = config_of(c, in_b, cand);
            if (cand_vec > vec) {
                vec = std::move(cand_vec);
                return true;
            }
            in_b[static_cast<size_t>(e_del)] = 1;
            in_b[static_cast<size_t>(e_add)] = 0;
        }
    }
    return false;
}

Skeleton finalize(const Contraction& c, std::vector<char> in_b, int root) {
    Skeleton b;
    b.root = root;
    Rooted r = root_tree(c, in_b, root);
    b.config_vector = config_of(c, in_b, r);
    b.parent = std::move(r.parent);
    b.parent_edge = std::move(r.parent_edge);
    b.level = std::move(r.level);
    b.in_b = std::move(in_b);

    const int n = c.h.vertex_count();
    b.children.assign(static_cast<size_t>(n), {});
    for (int v = 0; v < n; ++v)
        if (b.parent[static_cast<size_t>(v)] >= 0)
            b.children[static_cast<size_t>(b.parent[static_cast<size_t>(v)])].push_back(v);

    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.in_b[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        ++deg[static_cast<size_t>(ed.u)];
        ++deg[static_cast<size_t>(ed.v)];
        if (c.h_edges[static_cast<size_t>(e)].is_two()) ++b.two_edge_count;
    }
    b.in_leaf_s.assign(static_cast<size_t>(n), 0);
    for (int v = c.tree_count; v < n; ++v) {
        if (deg[static_cast<size_t>(v)] == 1) {
            b.in_leaf_s[static_cast<size_t>(v)] = 1;
            b.leaf_s.push_back(v);
        }
    }
    b.b1_edge.assign(static_cast<size_t>(c.h.edge_count()), 0);
    b.b1_degree.assign(static_cast<size_t>(n), 0);
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.in_b[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        if (b.in_leaf_s[static_cast<size_t>(ed.u)] || b.in_leaf_s[static_cast<size_t>(ed.v)]) continue;
        b.b1_edge[static_cast<size_t>(e)] = 1;
        ++b.b1_degree[static_cast<size_t>(ed.u)];
        ++b.b1_degree[static_cast<size_t>(ed.v)];
    }
    return b;
}

}  // namespace

Skeleton build_skeleton_take2(const Contraction& c) {
    if (c.tree_count == 0) throw NoTreeVertex("H has no tree vertex to root the skeleton at");
    return finalize(c, greedy_max_two(c), 0);
}

Skeleton build_skeleton_take3(const Contraction& c, LexSearchOptions opts) {
    if (c.tree_count == 0) throw NoTreeVertex("H has no tree vertex to root the skeleton at");
    std::uint64_t moves = 0;
    std::vector<char> best;
    std::vector<long long> best_vec;
    int best_root = -1;
    for (int root = 0; root < c.tree_count; ++root) {
        std::vector<char> in_b = greedy_max_two(c);
        std::vector<long long> vec = config_of(c, in_b, root_tree(c, in_b, root));
        while (improve_once(c, in_b, root, vec)) {
            if (++moves > opts.max_moves) throw InstanceTooLarge("skeleton exchange search exceeded its move budget");
        }
        if (best_root < 0 || vec > best_vec) {
            best = std::move(in_b);
            best_vec = std::move(vec);
            best_root = root;
        }
    }
    return finalize(c, std::move(best), best_root);
}

std::vector<long long> exhaustive_lex_config_vector(const Contraction& c, int max_h_vertices,
                                                    std::uint64_t max_trees) {
    const int n = c.h.vertex_count();
    const int m = c.h.edge_count();
    if (c.tree_count == 0) throw NoTreeVertex("H has no tree vertex to root the skeleton at");
    if (n > max_h_vertices) throw InstanceTooLarge("H too large for spanning tree enumeration");

    std::vector<long long> best;
    std::vector<char> in_b(static_cast<size_t>(m), 0);
    std::uint64_t trees = 0;

    auto consider = [&]() {
        if (++trees > max_trees) throw InstanceTooLarge("spanning tree enumeration exceeded its budget");
        for (int root = 0; root < c.tree_count; ++root) {
            std::vector<long long> vec = config_of(c, in_b, root_tree(c, in_b, root));
            if (best.empty() || vec > best) best = std::move(vec);
        }
    };

    // Include/exclude over edges; dsu copied per include branch (H is small).
    auto rec = [&](auto&& self, EdgeId idx, int chosen, Dsu dsu) -> void {
        if (chosen == n - 1) {
            consider();
            return;
        }
        if (idx == m || chosen + (m - idx) < n - 1) return;
        const Edge& ed = c.h.edge(idx);
        Dsu with = dsu;
        if (with.unite(ed.u, ed.v)) {
            in_b[static_cast<size_t>(idx)] = 1;
            self(self, idx + 1, chosen + 1, std::move(with));
            in_b[static_cast<size_t>(idx)] = 0;
        }
        self(self, idx + 1, chosen, std::move(dsu));
    };
    rec(rec, 0, 0, Dsu(n));
    if (best.empty()) throw InvariantViolation("H has no spanning tree");
    return best;
}

void validate_skeleton(const Contraction& c, const Skeleton& b) {
    const int n = c.h.vertex_count();
    std::vector<char> has_two(static_cast<size_t>(n), 0);
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.in_b[static_cast<size_t>(e)] || !c.h_edges[static_cast<size_t>(e)].is_two()) continue;
        const Edge& ed = c.h.edge(e);
        has_two[static_cast<size_t>(ed.u)] = 1;
        has_two[static_cast<size_t>(ed.v)] = 1;
    }
    for (int v = c.tree_count; v < n; ++v)
        if (!has_two[static_cast<size_t>(v)])
            throw SkeletonInvariantViolated("non-tree vertex " + std::to_string(v) +
                                            " has no 2-edge of B incident on it");

    for (int v : b.leaf_s) {
        EdgeId only = -1;
        for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
            if (!b.in_b[static_cast<size_t>(e)]) continue;
            const Edge& ed = c.h.edge(e);
            if (ed.u == v || ed.v == v) only = e;
        }
        if (only < 0 || !c.h_edges[static_cast<size_t>(only)].is_two())
            throw SkeletonInvariantViolated("the unique B edge at leaf " + std::to_string(v) +
                                            " is not a 2-edge");
    }

    bool b1_has_edge = false;
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) b1_has_edge |= (b.b1_edge[static_cast<size_t>(e)] != 0);
    for (int v = 0; v < n; ++v) {
        if (!b.in_b1_vertex(v)) continue;
        if (b.b1_degree[static_cast<size_t>(v)] == 1 && !c.is_tree_vertex(v))
            throw SkeletonInvariantViolated("leaf " + std::to_string(v) + " of B1 is not a tree vertex");
        if (b1_has_edge && b.b1_degree[static_cast<size_t>(v)] == 0)
            throw SkeletonInvariantViolated("B1 vertex " + std::to_string(v) + " is isolated");
    }

    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.b1_edge[static_cast<size_t>(e)]) continue;
        if (c.h_edges[static_cast<size_t>(e)].is_two()) continue;
        const Edge& ed = c.h.edge(e);
        // Orient toward the root: u is the child endpoint.
        int u = (b.parent[static_cast<size_t>(ed.u)] == ed.v) ? ed.u : ed.v;
        if (c.is_tree_vertex(u)) continue;
        bool ok = false;
        for (int ch : b.children[static_cast<size_t>(u)]) {
            EdgeId pe = b.parent_edge[static_cast<size_t>(ch)];
            if (c.is_tree_vertex(ch) && c.h_edges[static_cast<size_t>(pe)].is_two()) ok = true;
        }
        if (!ok)
            throw SkeletonInvariantViolated("1-edge child " + std::to_string(u) +
                                            " has no tree child over a 2-edge");
    }
}

std::vector<int> subtree_st(const Contraction& c, const Skeleton& b, int u, int v) {
    const int n = c.h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidParams("subtree vertex out of range");
    if (u == v) throw InvalidParams("subtree anchor equals its excluded vertex");
    if (!b.in_b1_vertex(u) || !b.in_b1_vertex(v)) throw VertexNotInB1("subtree endpoints must lie in B1");

    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.b1_edge[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        adj[static_cast<size_t>(ed.u)].push_back(ed.v);
        adj[static_cast<size_t>(ed.v)].push_back(ed.u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(u)] = 1;  // excluded
    seen[static_cast<size_t>(v)] = 1;
    std::vector<int> out{v};
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : adj[static_cast<size_t>(x)]) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            out.push_back(w);
            q.push(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int closest_tree_vertex_ct(const Contraction& c, const Skeleton& b, int u, int v) {
    subtree_st(c, b, u, v);  // validate inputs
    if (c.is_tree_vertex(v)) return v;
    const int n = c.h.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!b.b1_edge[static_cast<size_t>(e)]) continue;
        const Edge& ed = c.h.edge(e);
        adj[static_cast<size_t>(ed.u)].push_back(ed.v);
        adj[static_cast<size_t>(ed.v)].push_back(ed.u);
    }
    std::vector<int> dist(static_cast<size_t>(n), -1);
    dist[static_cast<size_t>(u)] = -2;  // excluded
    dist[static_cast<size_t>(v)] = 0;
    std::queue<int> q;
    q.push(v);
    int best = -1;
    int best_dist = std::numeric_limits<int>::max();
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (c.is_tree_vertex(x) &&
            (dist[static_cast<size_t>(x)] < best_dist || (dist[static_cast<size_t>(x)] == best_dist && x < best))) {
            best = x;
            best_dist = dist[static_cast<size_t>(x)];
        }
        for (int w : adj[static_cast<size_t>(x)]) {
            if (dist[static_cast<size_t>(w)] != -1) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(x)] + 1;
            q.push(w);
        }
    }
    if (best < 0) throw NoTreeVertex("no tree vertex in the component");
    return best;
}

}  // namespace rainbow
