#include "rainbow/take2.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbow {

namespace {

void apply_h_edge(RainbowColoring& col, const HEdge& he, int color, Rule rule) {
    col.assignment[static_cast<size_t>(he.rep1)] = color;
    col.provenance[static_cast<size_t>(he.rep1)] = rule;
    col.relevant[static_cast<size_t>(he.rep1)] = true;
    if (he.is_two()) {
        col.assignment[static_cast<size_t>(he.rep2)] = color;
        col.provenance[static_cast<size_t>(he.rep2)] = rule;
        col.relevant[static_cast<size_t>(he.rep2)] = true;
    }
}

/// The single B edge incident on a leaf of B.
EdgeId only_b_edge(const Contraction& c, const Skeleton& sk, int hv) {
    if (sk.parent[static_cast<size_t>(hv)] >= 0) return sk.parent_edge[static_cast<size_t>(hv)];
    throw InvariantViolation("leaf of B has no outgoing edge");
}

}  // namespace

RainbowColoring color_take2(const Graph& g, const InducedForest& forest, const Contraction& c,
                            const Skeleton& sk) {
    validate_skeleton(c, sk);
    const int m = g.edge_count();
    const int f = forest.f_value();
    const int t = c.tree_count;
    {
        int covered = 0;
        for (const auto& tv : c.tree_vertices) covered += static_cast<int>(tv.size());
        if (covered != f) throw PreconditionViolated("forest does not match the contraction");
    }

    RainbowColoring col;
    col.palette_size = (m == 0) ? 0 : f + t + 2;
    col.assignment.assign(static_cast<size_t>(m), 0);
    col.relevant.assign(static_cast<size_t>(m), false);
    col.provenance.assign(static_cast<size_t>(m), Rule::none);

    // Forest edges: distinct colors 1..f-t, trees in index order.
    int next = 1;
    for (int tree = 0; tree < t; ++tree) {
        std::vector<EdgeId> inside;
        for (VertexId u : c.tree_vertices[static_cast<size_t>(tree)])
            for (VertexId w : g.neighbors(u))
                if (u < w && c.tree_of_vertex(w) == tree) inside.push_back(g.edge_id(u, w));
        std::sort(inside.begin(), inside.end());
        for (EdgeId e : inside) {
            col.assignment[static_cast<size_t>(e)] = next++;
            col.relevant[static_cast<size_t>(e)] = true;
            col.provenance[static_cast<size_t>(e)] = Rule::forest;
        }
    }
    if (next - 1 != f - t) throw InvariantViolation("forest edge count is not f - t");

    const int g1 = f + t + 1;
    const int g2 = f + t + 2;
    auto s1 = [&](int tree) { return f - t + 2 * tree + 1; };
    auto s2 = [&](int tree) { return f - t + 2 * tree + 2; };

    std::vector<char> h_colored(static_cast<size_t>(c.h.edge_count()), 0);

    // Non-tree leaves of B: global colors on the two representatives.
    for (int hv : sk.leaf_s) {
        EdgeId he_id = only_b_edge(c, sk, hv);
        const HEdge& he = c.h_edges[static_cast<size_t>(he_id)];
        if (!he.is_two()) throw SkeletonInvariantViolated("leaf edge is not a 2-edge");
        col.assignment[static_cast<size_t>(he.rep1)] = g1;
        col.assignment[static_cast<size_t>(he.rep2)] = g2;
        col.provenance[static_cast<size_t>(he.rep1)] = Rule::global_leaf;
        col.provenance[static_cast<size_t>(he.rep2)] = Rule::global_leaf;
        col.relevant[static_cast<size_t>(he.rep1)] = true;
        col.relevant[static_cast<size_t>(he.rep2)] = true;
        h_colored[static_cast<size_t>(he_id)] = 1;
    }

    // Tree vertices by (level, id), root excluded; each colors up to three
    // edges on its root path: its own outgoing, the parent's, the
    // grandparent's ("if uncolored" guards make the order immaterial).
    std::vector<int> order;
    for (int hv = 0; hv < t; ++hv)
        if (hv != sk.root) order.push_back(hv);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int lx = sk.level[static_cast<size_t>(x)], ly = sk.level[static_cast<size_t>(y)];
        return lx != ly ? lx < ly : x < y;
    });

    for (int x_t : order) {
        int v = sk.parent[static_cast<size_t>(x_t)];
        if (c.is_tree_vertex(v)) throw InvariantViolation("adjacent tree vertices in H");
        EdgeId e1 = sk.parent_edge[static_cast<size_t>(x_t)];
        const HEdge& he1 = c.h_edges[static_cast<size_t>(e1)];
        if (he1.is_two()) {
            TreePath fp = foot_path(g, c, e1);
            EdgeId donor = *std::min_element(fp.edges.begin(), fp.edges.end());
            col.color_giving_edge[x_t] = donor;
            if (!h_colored[static_cast<size_t>(e1)]) {
                apply_h_edge(col, he1, col.color(donor), Rule::b1_two_edge);
                h_colored[static_cast<size_t>(e1)] = 1;
            }
            EdgeId e2 = sk.parent_edge[static_cast<size_t>(v)];
            if (!h_colored[static_cast<size_t>(e2)]) {
                apply_h_edge(col, c.h_edges[static_cast<size_t>(e2)], s1(x_t), Rule::b1_surplus);
                h_colored[static_cast<size_t>(e2)] = 1;
            }
            int w = sk.parent[static_cast<size_t>(v)];
            if (w != sk.root) {
                EdgeId e3 = sk.parent_edge[static_cast<size_t>(w)];
                if (!h_colored[static_cast<size_t>(e3)]) {
                    apply_h_edge(col, c.h_edges[static_cast<size_t>(e3)], s2(x_t), Rule::b1_surplus);
                    h_colored[static_cast<size_t>(e3)] = 1;
                }
            }
        } else {
            if (!h_colored[static_cast<size_t>(e1)]) {
                apply_h_edge(col, he1, s1(x_t), Rule::b1_surplus);
                h_colored[static_cast<size_t>(e1)] = 1;
            }
            EdgeId e2 = sk.parent_edge[static_cast<size_t>(v)];
            if (!h_colored[static_cast<size_t>(e2)]) {
                apply_h_edge(col, c.h_edges[static_cast<size_t>(e2)], s2(x_t), Rule::b1_surplus);
                h_colored[static_cast<size_t>(e2)] = 1;
            }
        }
    }

    // Every B1 edge must be colored now, all with pairwise distinct colors.
    std::set<int> b1_colors;
    for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
        if (!sk.b1_edge[static_cast<size_t>(e)]) continue;
        if (!h_colored[static_cast<size_t>(e)])
            throw InvariantViolation("inner skeleton edge " + std::to_string(e) + " left uncolored");
        int color = col.color(c.h_edges[static_cast<size_t>(e)].rep1);
        if (!b1_colors.insert(color).second)
            throw InvariantViolation("inner skeleton edges share color " + std::to_string(color));
    }

    for (EdgeId e = 0; e < m; ++e) {
        if (col.assignment[static_cast<size_t>(e)] == 0) {
            col.assignment[static_cast<size_t>(e)] = 1;
            col.provenance[static_cast<size_t>(e)] = Rule::filler;
        }
    }
    return col;
}

namespace {

void append_path(WitnessPath& p, const TreePath& tp) {
    for (size_t i = 0; i + 1 < tp.vertices.size(); ++i) {
        p.vertices.push_back(tp.vertices[i + 1]);
        p.edges.push_back(tp.edges[i]);
    }
}

void append_edge(WitnessPath& p, const Graph& g, EdgeId e) {
    p.vertices.push_back(g.other_end(e, p.vertices.back()));
    p.edges.push_back(e);
}

/// Climb from cur (inside H vertex x) to the parent of x, appending the
/// in-tree approach and one representative. Returns the arrival G vertex.
VertexId climb_step(WitnessPath& p, const Graph& g, const Contraction& c, const Skeleton& sk,
                    const RainbowColoring& col, int x, VertexId cur) {
    EdgeId he_id = sk.parent_edge[static_cast<size_t>(x)];
    const HEdge& he = c.h_edges[static_cast<size_t>(he_id)];
    if (c.is_tree_vertex(x)) {
        const auto& tv = c.tree_vertices[static_cast<size_t>(x)];
        if (he.is_two()) {
            VertexId z1 = c.foot(he.rep1, x, g);
            VertexId z2 = c.foot(he.rep2, x, g);
            EdgeId donor = col.color_giving_edge.at(x);
            TreePath approach = path_avoiding_edge(g, tv, cur, z1, z2, donor);
            append_path(p, approach);
            EdgeId rep = (approach.vertices.back() == z1) ? he.rep1 : he.rep2;
            append_edge(p, g, rep);
        } else {
            VertexId z = c.foot(he.rep1, x, g);
            append_path(p, tree_path(g, tv, cur, z));
            append_edge(p, g, he.rep1);
        }
    } else {
        append_edge(p, g, he.rep1);
    }
    return p.vertices.back();
}

}  // namespace

WitnessPath take2_witness(const Graph& g, const Contraction& c, const Skeleton& sk,
                          const RainbowColoring& col, VertexId src, VertexId dst) {
    WitnessPath out;
    out.vertices.push_back(src);
    if (src == dst) return out;

    // Leaves of B attach over their globally colored representatives.
    VertexId a = src, b = dst;
    EdgeId a_edge = -1, b_edge = -1;
    int ha = c.h_of_vertex[static_cast<size_t>(src)];
    int hb = c.h_of_vertex[static_cast<size_t>(dst)];
    if (sk.in_leaf_s[static_cast<size_t>(ha)]) {
        const HEdge& he = c.h_edges[static_cast<size_t>(only_b_edge(c, sk, ha))];
        a_edge = he.rep1;
        a = g.other_end(he.rep1, src);
        ha = c.h_of_vertex[static_cast<size_t>(a)];
    }
    if (sk.in_leaf_s[static_cast<size_t>(hb)]) {
        const HEdge& he = c.h_edges[static_cast<size_t>(only_b_edge(c, sk, hb))];
        b_edge = he.rep2;
        b = g.other_end(he.rep2, dst);
        hb = c.h_of_vertex[static_cast<size_t>(b)];
    }
    if (a_edge >= 0) append_edge(out, g, a_edge);

    if (ha == hb) {
        if (c.is_tree_vertex(ha)) {
            append_path(out, tree_path(g, c.tree_vertices[static_cast<size_t>(ha)], a, b));
        } else if (a != b) {
            throw InvariantViolation("distinct vertices mapped to one non-tree H vertex");
        }
    } else {
        // Climb both sides of the B1 path to the common ancestor.
        WitnessPath left, right;
        left.vertices.push_back(a);
        right.vertices.push_back(b);
        int xa = ha, xb = hb;
        VertexId ca = a, cb = b;
        while (xa != xb) {
            if (sk.level[static_cast<size_t>(xa)] >= sk.level[static_cast<size_t>(xb)]) {
                ca = climb_step(left, g, c, sk, col, xa, ca);
                xa = sk.parent[static_cast<size_t>(xa)];
            } else {
                cb = climb_step(right, g, c, sk, col, xb, cb);
                xb = sk.parent[static_cast<size_t>(xb)];
            }
        }
        if (c.is_tree_vertex(xa)) {
            append_path(left, tree_path(g, c.tree_vertices[static_cast<size_t>(xa)], ca, cb));
        } else if (ca != cb) {
            throw InvariantViolation("sides of the climb met at different vertices");
        }
        for (size_t i = 1; i < left.vertices.size(); ++i) {
            out.vertices.push_back(left.vertices[i]);
            out.edges.push_back(left.edges[i - 1]);
        }
        for (size_t i = right.vertices.size(); i-- > 1;) {
            out.vertices.push_back(right.vertices[i - 1]);
            out.edges.push_back(right.edges[i - 1]);
        }
    }

    if (b_edge >= 0) append_edge(out, g, b_edge);
    if (out.vertices.back() != dst) throw InvariantViolation("witness path missed its endpoint");
    for (EdgeId e : out.edges) out.colors.push_back(col.color(e));
    return out;
}

}  // namespace rainbow
