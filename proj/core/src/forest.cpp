#include "rainbow/forest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>

namespace rainbow {

namespace {

/// Union-find with an undo stack and no path compression, so branch-and-bound
/// can roll back include decisions cheaply.
class RollbackDsu {
  public:
    explicit RollbackDsu(int n) : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]) std::swap(a, b);
        trail_.push_back({b, rank_[static_cast<size_t>(a)]});
        parent_[static_cast<size_t>(b)] = a;
        if (rank_[static_cast<size_t>(a)] == rank_[static_cast<size_t>(b)]) ++rank_[static_cast<size_t>(a)];
        return true;
    }
    size_t mark() const { return trail_.size(); }
    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            auto [child, old_rank] = trail_.back();
            trail_.pop_back();
            int root = parent_[static_cast<size_t>(child)];
            parent_[static_cast<size_t>(child)] = child;
            rank_[static_cast<size_t>(root)] = old_rank;
        }
    }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> trail_;
};

struct ForestSearch {
    const Graph& g;
    int n;
    RollbackDsu dsu;
    std::vector<char> in_set;
    std::vector<VertexId> current;

    explicit ForestSearch(const Graph& gr)
        : g(gr), n(gr.vertex_count()), dsu(gr.vertex_count()),
          in_set(static_cast<size_t>(gr.vertex_count()), 0) {}

    /// True (and unions applied) when adding v keeps the set acyclic.
    bool try_include(VertexId v, size_t& mark) {
        mark = dsu.mark();
        for (VertexId w : g.neighbors(v)) {
            if (!in_set[static_cast<size_t>(w)]) continue;
            if (!dsu.unite(v, w)) {
                dsu.rollback(mark);
                return false;
            }
        }
        in_set[static_cast<size_t>(v)] = 1;
        current.push_back(v);
        return true;
    }
    void undo_include(size_t mark) {
        in_set[static_cast<size_t>(current.back())] = 0;
        current.pop_back();
        dsu.rollback(mark);
    }
};

void search_max(ForestSearch& s, int idx, std::vector<VertexId>& best) {
    if (static_cast<int>(s.current.size()) + (s.n - idx) <= static_cast<int>(best.size())) return;
    if (idx == s.n) {
        best = s.current;
        return;
    }
    size_t mark;
    if (s.try_include(idx, mark)) {
        search_max(s, idx + 1, best);
        s.undo_include(mark);
    }
    search_max(s, idx + 1, best);
}

template <typename Sink>
void enumerate_of_size(ForestSearch& s, int idx, int target, Sink&& sink) {
    if (static_cast<int>(s.current.size()) + (s.n - idx) < target) return;
    if (static_cast<int>(s.current.size()) == target) {
        sink(s.current);
        return;
    }
    if (idx == s.n) return;
    size_t mark;
    if (s.try_include(idx, mark)) {
        enumerate_of_size(s, idx + 1, target, sink);
        s.undo_include(mark);
    }
    enumerate_of_size(s, idx + 1, target, sink);
}

}  // namespace

bool is_induced_forest(const Graph& g, const std::vector<VertexId>& s) {
    RollbackDsu dsu(g.vertex_count());
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : s) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidParams("vertex out of range");
        if (in[static_cast<size_t>(v)]) throw InvalidParams("duplicate vertex in set");
        in[static_cast<size_t>(v)] = 1;
    }
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (w > v && in[static_cast<size_t>(w)] && !dsu.unite(v, w)) return false;
    return true;
}

InducedForest make_induced_forest(const Graph& g, const std::vector<VertexId>& s) {
    if (!is_induced_forest(g, s)) throw InvalidParams("vertex set does not induce a forest");
    InducedForest f;
    f.vertices = s;
    std::sort(f.vertices.begin(), f.vertices.end());
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : f.vertices) in[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : f.vertices) {
        if (seen[static_cast<size_t>(v)]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(v);
        seen[static_cast<size_t>(v)] = 1;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            comp.push_back(x);
            for (VertexId w : g.neighbors(x))
                if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        f.components.push_back(std::move(comp));
    }
    std::sort(f.components.begin(), f.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return f;
}

InducedForest max_induced_forest(const Graph& g, ForestSolverCaps caps) {
    if (g.vertex_count() > caps.exact_max_n)
        throw InstanceTooLarge("exact forest solver capped at n=" + std::to_string(caps.exact_max_n));
    if (g.vertex_count() == 0) return {};
    std::vector<VertexId> best = heuristic_induced_forest(g).vertices;
    ForestSearch s(g);
    search_max(s, 0, best);
    return make_induced_forest(g, best);
}

InducedForest max_induced_forest_min_components(const Graph& g, ForestSolverCaps caps) {
    if (g.vertex_count() > caps.min_components_max_n)
        throw InstanceTooLarge("min-components solver capped at n=" +
                               std::to_string(caps.min_components_max_n));
    if (g.vertex_count() == 0) return {};
    int f = max_induced_forest(g, caps).f_value();
    InducedForest best;
    int best_t = g.vertex_count() + 1;
    ForestSearch s(g);
    // Include-first enumeration yields candidate sets in lexicographic order,
    // so keeping the first set achieving the minimum settles ties.
    enumerate_of_size(s, 0, f, [&](const std::vector<VertexId>& set) {
        InducedForest cand = make_induced_forest(g, set);
        if (cand.component_count() < best_t) {
            best_t = cand.component_count();
            best = std::move(cand);
        }
    });
    return best;
}

InducedForest heuristic_induced_forest(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<VertexId> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v)
            if (!removed[static_cast<size_t>(v)] &&
                (pick < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]))
                pick = v;
        removed[static_cast<size_t>(pick)] = 1;
        order.push_back(pick);
        for (VertexId w : g.neighbors(pick))
            if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    ForestSearch s(g);
    size_t mark;
    for (VertexId v : order) s.try_include(v, mark);
    for (VertexId v = 0; v < n; ++v)  // augmentation sweep to guarantee maximality
        if (!s.in_set[static_cast<size_t>(v)]) s.try_include(v, mark);
    return make_induced_forest(g, s.current);
}

namespace {

struct FvsGraph {
    const Graph& g;
    std::vector<char> alive;

    explicit FvsGraph(const Graph& gr) : g(gr), alive(static_cast<size_t>(gr.vertex_count()), 1) {}

    int live_degree(VertexId v) const {
        int d = 0;
        for (VertexId w : g.neighbors(v)) d += alive[static_cast<size_t>(w)];
        return d;
    }
    /// Removes degree <= 1 vertices until none remain; records removals.
    void peel(std::vector<VertexId>& trail) {
        bool again = true;
        while (again) {
            again = false;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (alive[static_cast<size_t>(v)] && live_degree(v) <= 1) {
                    alive[static_cast<size_t>(v)] = 0;
                    trail.push_back(v);
                    again = true;
                }
        }
    }
    void restore(const std::vector<VertexId>& trail, size_t from) {
        for (size_t i = trail.size(); i > from; --i) alive[static_cast<size_t>(trail[i - 1])] = 1;
    }

    /// Shortest cycle in the live graph: per live edge, shortest path between
    /// its endpoints avoiding the edge itself.
    std::vector<VertexId> shortest_cycle() const {
        std::vector<VertexId> best;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            VertexId a = g.edge(e).u, b = g.edge(e).v;
            if (!alive[static_cast<size_t>(a)] || !alive[static_cast<size_t>(b)]) continue;
            std::vector<int> prev(static_cast<size_t>(g.vertex_count()), -2);
            std::queue<VertexId> q;
            prev[static_cast<size_t>(a)] = -1;
            q.push(a);
            while (!q.empty() && prev[static_cast<size_t>(b)] == -2) {
                VertexId x = q.front();
                q.pop();
                for (VertexId w : g.neighbors(x)) {
                    if (!alive[static_cast<size_t>(w)] || prev[static_cast<size_t>(w)] != -2) continue;
                    if ((x == a && w == b) || (x == b && w == a)) continue;
                    prev[static_cast<size_t>(w)] = x;
                    q.push(w);
                }
            }
            if (prev[static_cast<size_t>(b)] == -2) continue;
            std::vector<VertexId> cyc;
            for (VertexId x = b; x != -1; x = prev[static_cast<size_t>(x)]) cyc.push_back(x);
            if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
            if (best.size() == 3) break;
        }
        return best;
    }
};

bool fvs_solvable(FvsGraph& fg, int k, std::vector<VertexId>& trail) {
    size_t mark = trail.size();
    fg.peel(trail);
    std::vector<VertexId> cyc = fg.shortest_cycle();
    if (cyc.empty()) {
        fg.restore(trail, mark);
        trail.resize(mark);
        return true;
    }
    if (k == 0) {
        fg.restore(trail, mark);
        trail.resize(mark);
        return false;
    }
    for (VertexId v : cyc) {
        fg.alive[static_cast<size_t>(v)] = 0;
        trail.push_back(v);
        if (fvs_solvable(fg, k - 1, trail)) {
            fg.restore(trail, mark);
            trail.resize(mark);
            return true;
        }
        fg.alive[static_cast<size_t>(v)] = 1;
        trail.pop_back();
    }
    fg.restore(trail, mark);
    trail.resize(mark);
    return false;
}

}  // namespace

int forest_number_via_fvs(const Graph& g, ForestSolverCaps caps) {
    if (g.vertex_count() > caps.exact_max_n)
        throw InstanceTooLarge("fvs solver capped at n=" + std::to_string(caps.exact_max_n));
    FvsGraph fg(g);
    std::vector<VertexId> trail;
    for (int k = 0; k <= g.vertex_count(); ++k)
        if (fvs_solvable(fg, k, trail)) return g.vertex_count() - k;
    throw InvariantViolation("deleting all vertices kills every cycle");
}

int max_induced_tree_size(const Graph& g, ForestSolverCaps caps) {
    int n = g.vertex_count();
    if (n > caps.exact_max_n)
        throw InstanceTooLarge("tree-size scan capped at n=" + std::to_string(caps.exact_max_n));
    if (n == 0) return 0;
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<bool> forest(static_cast<size_t>(full) + 1, false);
    forest[0] = true;
    int best = 1;  // single vertex
    for (std::uint32_t s = 1; s <= full; ++s) {
        bool ok = false;
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = 1u << v;
            if (!(s & bit)) continue;
            if (std::popcount(adj[static_cast<size_t>(v)] & s) <= 1) {
                ok = forest[s ^ bit];
                break;
            }
        }
        forest[s] = ok;
        if (!ok) continue;
        int size = std::popcount(s);
        if (size <= best) continue;
        int edges = 0;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) edges += std::popcount(adj[static_cast<size_t>(v)] & s);
        if (edges / 2 == size - 1) best = size;
    }
    return best;
}

}  // namespace rainbow
