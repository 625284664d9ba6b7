#include "rainbow/verify.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace rainbow {

namespace {

struct SearchState {
    VertexId v;
    std::uint64_t mask;
    int prev = -1;  // index into the state pool for path recovery
    EdgeId via = -1;
};

/// Minimal-mask antichain per vertex: a new (v, mask) is useful only if no
/// recorded mask at v is a subset of it.
class Frontier {
  public:
    explicit Frontier(int n) : masks_(static_cast<size_t>(n)) {}
    bool dominated(VertexId v, std::uint64_t m) const {
        for (std::uint64_t s : masks_[static_cast<size_t>(v)])
            if ((s & m) == s) return true;
        return false;
    }
    void insert(VertexId v, std::uint64_t m) {
        auto& lst = masks_[static_cast<size_t>(v)];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [m](std::uint64_t s) { return (m & s) == m; }),
                  lst.end());
        lst.push_back(m);
    }

  private:
    std::vector<std::vector<std::uint64_t>> masks_;
};

void validate_assignment(const Graph& g, const RainbowColoring& c) {
    if (static_cast<int>(c.assignment.size()) != g.edge_count())
        throw PaletteMismatch("assignment covers " + std::to_string(c.assignment.size()) +
                              " edges, graph has " + std::to_string(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int col = c.assignment[static_cast<size_t>(e)];
        if (col < 1 || col > c.palette_size)
            throw PaletteMismatch("edge " + std::to_string(e) + " colored " + std::to_string(col) +
                                  " outside palette 1.." + std::to_string(c.palette_size));
    }
}

}  // namespace

VerificationReport verify_rainbow(const Graph& g, const RainbowColoring& c, VerifyOptions opts) {
    int n = g.vertex_count();
    VerificationReport rep;
    if (g.edge_count() > 0) validate_assignment(g, c);
    if (c.palette_size > 64) throw InstanceTooLarge("palette above 64 colors");
    rep.colors_used = c.colors_used();
    if (n <= 1) {
        rep.rainbow_connected = true;
        return rep;
    }
    if (!is_connected(g)) {
        rep.rainbow_connected = false;
        // Report some unreachable pair.
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<VertexId> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
        for (VertexId v = 1; v < n; ++v)
            if (!seen[static_cast<size_t>(v)]) {
                rep.failing_pair = {0, v};
                break;
            }
        return rep;
    }

    for (VertexId s = 0; s < n; ++s) {
        std::vector<char> reached(static_cast<size_t>(n), 0);
        reached[static_cast<size_t>(s)] = 1;
        int to_reach = n - 1 - s;  // only need pairs (s, t) with t > s
        for (VertexId t = 0; t < s; ++t) reached[static_cast<size_t>(t)] = 1;
        if (to_reach == 0) continue;

        std::vector<SearchState> pool;
        Frontier frontier(n);
        std::queue<int> q;
        pool.push_back({s, 0, -1, -1});
        frontier.insert(s, 0);
        q.push(0);
        std::uint64_t budget = opts.state_budget;
        while (!q.empty() && to_reach > 0) {
            int idx = q.front();
            q.pop();
            SearchState st = pool[static_cast<size_t>(idx)];
            for (VertexId w : g.neighbors(st.v)) {
                EdgeId e = g.edge_id(st.v, w);
                std::uint64_t bit = 1ull << (c.assignment[static_cast<size_t>(e)] - 1);
                if (st.mask & bit) continue;
                std::uint64_t m2 = st.mask | bit;
                if (frontier.dominated(w, m2)) continue;
                frontier.insert(w, m2);
                pool.push_back({w, m2, idx, e});
                int nidx = static_cast<int>(pool.size()) - 1;
                q.push(nidx);
                if (budget-- == 0) throw InstanceTooLarge("rainbow search state budget exhausted");
                if (!reached[static_cast<size_t>(w)]) {
                    reached[static_cast<size_t>(w)] = 1;
                    --to_reach;
                    if (opts.collect_paths && w > s) {
                        WitnessPath wp;
                        for (int i = nidx; i >= 0; i = pool[static_cast<size_t>(i)].prev) {
                            wp.vertices.push_back(pool[static_cast<size_t>(i)].v);
                            if (pool[static_cast<size_t>(i)].via >= 0)
                                wp.edges.push_back(pool[static_cast<size_t>(i)].via);
                        }
                        std::reverse(wp.vertices.begin(), wp.vertices.end());
                        std::reverse(wp.edges.begin(), wp.edges.end());
                        for (EdgeId pe : wp.edges) wp.colors.push_back(c.assignment[static_cast<size_t>(pe)]);
                        rep.paths[{s, w}] = std::move(wp);
                    }
                }
            }
        }
        if (to_reach > 0) {
            for (VertexId t = s + 1; t < n; ++t)
                if (!reached[static_cast<size_t>(t)]) {
                    rep.failing_pair = {s, t};
                    rep.rainbow_connected = false;
                    return rep;
                }
        }
    }
    rep.rainbow_connected = true;
    return rep;
}

bool check_witness(const Graph& g, const RainbowColoring& c, const WitnessPath& path) {
    if (path.vertices.empty()) return false;
    if (path.edges.size() + 1 != path.vertices.size()) return false;
    std::set<VertexId> seen;
    std::set<int> colors;
    for (VertexId v : path.vertices)
        if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
    for (size_t i = 0; i < path.edges.size(); ++i) {
        auto id = g.edge_between(path.vertices[i], path.vertices[i + 1]);
        if (!id || *id != path.edges[i]) return false;
        int col = c.assignment[static_cast<size_t>(*id)];
        if (!colors.insert(col).second) return false;
    }
    return true;
}

namespace {

/// Enumerates complete colorings depth-first over edges; returns true when some
/// coloring with at most k colors is rainbow-connected.
bool search_colorings(const Graph& g, int k, bool canonical, std::uint64_t& budget) {
    int m = g.edge_count();
    RainbowColoring c;
    c.palette_size = k;
    c.assignment.assign(static_cast<size_t>(m), 0);
    std::vector<int> stack_max(static_cast<size_t>(m) + 1, 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == m) {
            if (budget-- == 0) throw InstanceTooLarge("exact search budget exhausted");
            VerifyOptions vo;
            vo.state_budget = 2'000'000;
            if (verify_rainbow(g, c, vo).rainbow_connected) return true;
            --depth;
            continue;
        }
        int& col = c.assignment[static_cast<size_t>(depth)];
        int limit = canonical ? std::min(k, stack_max[static_cast<size_t>(depth)] + 1) : k;
        ++col;
        if (col > limit) {
            col = 0;
            --depth;
            continue;
        }
        stack_max[static_cast<size_t>(depth) + 1] =
            std::max(stack_max[static_cast<size_t>(depth)], col);
        ++depth;
    }
    return false;
}

}  // namespace

int rc_exact(const Graph& g, RcExactOptions opts) {
    int n = g.vertex_count();
    if (n == 0) throw InvalidParams("rc of the empty graph is undefined");
    if (!is_connected(g)) throw DisconnectedGraph("rc requires a connected graph");
    if (n == 1) return 0;
    int m = g.edge_count();
    int lb = diameter(g);
    std::uint64_t budget = opts.coloring_budget;
    for (int k = std::max(1, lb); k <= m; ++k) {
        if (k > 2 && m > opts.max_edges)
            throw InstanceTooLarge("edge count " + std::to_string(m) + " above exact cap " +
                                   std::to_string(opts.max_edges));
        if (search_colorings(g, k, opts.canonical, budget)) return k;
    }
    throw InvariantViolation("coloring every edge distinctly is always rainbow-connected");
}

int rc_lower_bound(const Graph& g) { return g.vertex_count() <= 1 ? 0 : diameter(g); }

}  // namespace rainbow
