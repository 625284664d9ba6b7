#include "rainbow/contraction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "rainbow/forest.hpp"

namespace rainbow {

VertexId Contraction::g_of_outside(int hv) const {
    if (is_tree_vertex(hv) || hv >= static_cast<int>(tree_count + outside.size()))
        throw InvalidParams("not an outside H vertex");
    return outside[static_cast<size_t>(hv - tree_count)];
}

int Contraction::tree_of_vertex(VertexId v) const {
    int hv = h_of_vertex[static_cast<size_t>(v)];
    return is_tree_vertex(hv) ? hv : -1;
}

VertexId Contraction::foot(EdgeId g_edge, int tree, const Graph& g) const {
    const Edge& e = g.edge(g_edge);
    if (tree_of_vertex(e.u) == tree) return e.u;
    if (tree_of_vertex(e.v) == tree) return e.v;
    throw InvalidParams("edge has no endpoint in tree");
}

Contraction contract_forest(const Graph& g, const std::vector<VertexId>& forest_vertices) {
    InducedForest f = make_induced_forest(g, forest_vertices);
    Contraction c;
    c.tree_count = f.component_count();
    c.tree_vertices = f.components;
    c.h_of_vertex.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (int t = 0; t < c.tree_count; ++t)
        for (VertexId v : c.tree_vertices[static_cast<size_t>(t)])
            c.h_of_vertex[static_cast<size_t>(v)] = t;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (c.h_of_vertex[static_cast<size_t>(v)] == -1) {
            c.h_of_vertex[static_cast<size_t>(v)] =
                c.tree_count + static_cast<int>(c.outside.size());
            c.outside.push_back(v);
        }

    std::map<std::pair<int, int>, std::vector<EdgeId>> bundles;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int ha = c.h_of_vertex[static_cast<size_t>(g.edge(e).u)];
        int hb = c.h_of_vertex[static_cast<size_t>(g.edge(e).v)];
        if (ha == hb) continue;  // forest-internal edge
        bundles[{std::min(ha, hb), std::max(ha, hb)}].push_back(e);
    }
    std::vector<std::pair<int, int>> h_edge_list;
    for (const auto& [key, ids] : bundles) {
        HEdge he;
        he.a = key.first;
        he.b = key.second;
        he.rep1 = ids[0];  // graph edge ids arrive in increasing order
        if (c.is_tree_vertex(he.a) || c.is_tree_vertex(he.b)) {
            he.kind = ids.size() >= 2 ? HEdge::Kind::two_edge : HEdge::Kind::one_edge;
            if (ids.size() >= 2) he.rep2 = ids[1];
        } else {
            he.kind = HEdge::Kind::outside_outside;
        }
        c.h_edges.push_back(he);
        h_edge_list.push_back({he.a, he.b});
    }
    c.h = Graph::from_edges(c.tree_count + static_cast<int>(c.outside.size()), h_edge_list);

    for (int hv = c.tree_count; hv < c.h.vertex_count(); ++hv) {
        bool covered = false;
        for (VertexId hw : c.h.neighbors(hv)) {
            auto id = c.h.edge_between(hv, hw);
            if (id && c.h_edges[static_cast<size_t>(*id)].is_two()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw ForestNotMaximal("vertex " + std::to_string(c.g_of_outside(hv)) +
                                   " can join the forest");
    }
    return c;
}

TreePath foot_path(const Graph& g, const Contraction& c, EdgeId h_edge) {
    const HEdge& he = c.h_edges.at(static_cast<size_t>(h_edge));
    if (!he.is_two()) throw InvalidParams("foot path requires a two_edge");
    int tree = c.is_tree_vertex(he.a) ? he.a : he.b;
    VertexId f1 = c.foot(he.rep1, tree, g);
    VertexId f2 = c.foot(he.rep2, tree, g);
    return tree_path(g, c.tree_vertices[static_cast<size_t>(tree)], f1, f2);
}

}  // namespace rainbow
