#include "rainbow/take1.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

namespace {

/// Component labels of G[D]; -1 outside D. Components seeded in ascending
/// vertex order, so label 0 contains the smallest vertex of D.
std::vector<int> label_components(const Graph& g, const std::vector<char>& in_d) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!in_d[static_cast<size_t>(v)] || comp[static_cast<size_t>(v)] >= 0) continue;
        comp[static_cast<size_t>(v)] = next;
        std::queue<int> q;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : g.neighbors(x)) {
                if (!in_d[static_cast<size_t>(w)] || comp[static_cast<size_t>(w)] >= 0) continue;
                comp[static_cast<size_t>(w)] = next;
                q.push(w);
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

DominatingConnector connect_forest(const Graph& g, const InducedForest& forest) {
    const int n = g.vertex_count();
    std::vector<char> in_f(static_cast<size_t>(n), 0);
    for (VertexId v : forest.vertices) in_f[static_cast<size_t>(v)] = 1;

    // Maximality: every outside vertex has two edges into one component.
    std::vector<int> fcomp(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < forest.components.size(); ++i)
        for (VertexId v : forest.components[i]) fcomp[static_cast<size_t>(v)] = static_cast<int>(i);
    for (int v = 0; v < n; ++v) {
        if (in_f[static_cast<size_t>(v)]) continue;
        std::vector<int> hits(forest.components.size(), 0);
        bool ok = false;
        for (int w : g.neighbors(v))
            if (in_f[static_cast<size_t>(w)] && ++hits[static_cast<size_t>(fcomp[static_cast<size_t>(w)])] >= 2) ok = true;
        if (!ok)
            throw ForestNotMaximal("vertex " + std::to_string(v) +
                                   " could join the forest; add it before connecting");
    }

    DominatingConnector dc;
    std::vector<char> in_d = in_f;
    while (true) {
        std::vector<int> comp = label_components(g, in_d);
        // BFS through G from component 0 to the nearest dominating vertex
        // of another component; interior vertices lie outside D.
        std::vector<int> par(static_cast<size_t>(n), -2);
        std::queue<int> q;
        for (int v = 0; v < n; ++v) {
            if (comp[static_cast<size_t>(v)] == 0) {
                par[static_cast<size_t>(v)] = -1;
                q.push(v);
            }
        }
        if (q.empty()) throw InvariantViolation("dominating set lost its first component");
        int found = -1;
        while (!q.empty() && found < 0) {
            int x = q.front();
            q.pop();
            for (int w : g.neighbors(x)) {
                if (par[static_cast<size_t>(w)] != -2) continue;
                par[static_cast<size_t>(w)] = x;
                if (comp[static_cast<size_t>(w)] > 0) {
                    found = w;
                    break;
                }
                if (comp[static_cast<size_t>(w)] < 0) q.push(w);  // interior, keep walking
            }
        }
        if (found < 0) break;  // single component left
        int interior = 0;
        for (int x = par[static_cast<size_t>(found)]; comp[static_cast<size_t>(x)] != 0; x = par[static_cast<size_t>(x)]) {
            in_d[static_cast<size_t>(x)] = 1;
            dc.connectors.push_back(x);
            ++interior;
        }
        if (interior > 2)
            throw InvariantViolation("connector between components needs more than two vertices");
    }

    for (int v = 0; v < n; ++v)
        if (in_d[static_cast<size_t>(v)]) dc.dominating.push_back(v);
    std::sort(dc.connectors.begin(), dc.connectors.end());

    // Spanning tree of G[D], grown from the smallest dominating vertex.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    seen[static_cast<size_t>(dc.dominating.front())] = 1;
    q.push(dc.dominating.front());
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.neighbors(x)) {
            if (!in_d[static_cast<size_t>(w)] || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            dc.tree_edges.push_back(g.edge_id(x, w));
            q.push(w);
        }
    }
    if (dc.tree_edges.size() + 1 != dc.dominating.size())
        throw InvariantViolation("dominating set is not connected after merging");
    std::sort(dc.tree_edges.begin(), dc.tree_edges.end());
    return dc;
}

RainbowColoring color_take1(const Graph& g, const DominatingConnector& dc) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int d = static_cast<int>(dc.dominating.size());

    RainbowColoring col;
    col.assignment.assign(static_cast<size_t>(m), 1);
    col.relevant.assign(static_cast<size_t>(m), false);
    col.provenance.assign(static_cast<size_t>(m), Rule::filler);
    col.palette_size = (m == 0) ? 0 : (d == n ? d - 1 : d + 1);

    int next = 1;
    for (EdgeId e : dc.tree_edges) {
        col.assignment[static_cast<size_t>(e)] = next++;
        col.relevant[static_cast<size_t>(e)] = true;
        col.provenance[static_cast<size_t>(e)] = Rule::spanning_tree;
    }

    std::vector<char> in_d(static_cast<size_t>(n), 0);
    for (VertexId v : dc.dominating) in_d[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_d[static_cast<size_t>(v)]) continue;
        VertexId d1 = -1, d2 = -1;
        for (int w : g.neighbors(v)) {  // ascending
            if (!in_d[static_cast<size_t>(w)]) continue;
            if (d1 < 0) {
                d1 = w;
            } else if (d2 < 0) {
                d2 = w;
                break;
            }
        }
        if (d2 < 0)
            throw PreconditionViolated("vertex " + std::to_string(v) +
                                       " lacks two dominating neighbors");
        EdgeId e1 = g.edge_id(v, d1);
        EdgeId e2 = g.edge_id(v, d2);
        col.assignment[static_cast<size_t>(e1)] = d;
        col.provenance[static_cast<size_t>(e1)] = Rule::dom_first;
        col.relevant[static_cast<size_t>(e1)] = true;
        col.assignment[static_cast<size_t>(e2)] = d + 1;
        col.provenance[static_cast<size_t>(e2)] = Rule::dom_second;
        col.relevant[static_cast<size_t>(e2)] = true;
    }
    return col;
}

}  // namespace rainbow
