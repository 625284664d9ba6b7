#include "rainbow/take3.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

int surplus_color(int f, int t, int tree) { return f - t + 1 + tree; }

// ======================== coloring engine ========================

struct Engine {
    const Graph& g;
    const Contraction& c;
    const Skeleton& sk;
    Take3Options opts;
    int f = 0;
    int t = 0;

    RainbowColoring col;
    std::vector<RuleEvent> events;
    std::vector<std::vector<EdgeId>> incident;   // B1 edges per H vertex, ascending
    std::vector<std::vector<EdgeId>> internal;   // graph edges per tree, ascending
    std::vector<char> r10_applied;               // by tree id

    Engine(const Graph& gr, const InducedForest& forest, const Contraction& ct,
           const Skeleton& skel, Take3Options o)
        : g(gr), c(ct), sk(skel), opts(o) {
        validate_skeleton(c, sk);
        std::set<VertexId> covered;
        for (const auto& tv : c.tree_vertices) covered.insert(tv.begin(), tv.end());
        if (covered != std::set<VertexId>(forest.vertices.begin(), forest.vertices.end()))
            throw PreconditionViolated("forest does not match the contraction");
        f = static_cast<int>(covered.size());
        t = c.tree_count;

        col.assignment.assign(static_cast<size_t>(g.edge_count()), 0);
        col.relevant.assign(static_cast<size_t>(g.edge_count()), false);
        col.provenance.assign(static_cast<size_t>(g.edge_count()), Rule::none);

        incident.resize(c.h.vertex_count());
        for (EdgeId e = 0; e < c.h.edge_count(); ++e) {
            if (!sk.b1_edge[static_cast<size_t>(e)]) continue;
            incident[static_cast<size_t>(c.h_edges[static_cast<size_t>(e)].a)].push_back(e);
            incident[static_cast<size_t>(c.h_edges[static_cast<size_t>(e)].b)].push_back(e);
        }
        internal.resize(static_cast<size_t>(t));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            int ta = c.tree_of_vertex(g.edge(e).u);
            if (ta >= 0 && ta == c.tree_of_vertex(g.edge(e).v))
                internal[static_cast<size_t>(ta)].push_back(e);
        }
        r10_applied.assign(static_cast<size_t>(t), 0);
    }

    const HEdge& he(EdgeId h) const { return c.h_edges[static_cast<size_t>(h)]; }
    bool is_two(EdgeId h) const { return he(h).is_two(); }
    bool h_uncolored(EdgeId h) const { return col.assignment[static_cast<size_t>(he(h).rep1)] == 0; }

    void set_color(EdgeId ge, int color, Rule rule) {
        if (col.assignment[static_cast<size_t>(ge)] != 0)
            throw InvariantViolation("edge " + std::to_string(ge) + " colored twice");
        col.assignment[static_cast<size_t>(ge)] = color;
        col.provenance[static_cast<size_t>(ge)] = rule;
        col.relevant[static_cast<size_t>(ge)] = true;
    }

    void apply_same(EdgeId h, int color, Rule rule) {
        set_color(he(h).rep1, color, rule);
        if (is_two(h)) set_color(he(h).rep2, color, rule);
    }

    void apply_split(EdgeId h, int c1, int c2, Rule rule) {
        set_color(he(h).rep1, c1, rule);
        set_color(he(h).rep2, c2, rule);
    }

    /// Colors follow the spoke's arranged orientation, not the natural rep order.
    void apply_spoke_split(const RuleEvent::Spoke& s, int c1, int c2, Rule rule) {
        set_color(s.rep1, c1, rule);
        set_color(s.rep2, c2, rule);
    }

    int two_degree(int hv) const {
        int d = 0;
        for (EdgeId e : incident[static_cast<size_t>(hv)])
            if (is_two(e)) ++d;
        return d;
    }

    bool incomplete(int hv) const {
        for (EdgeId e : incident[static_cast<size_t>(hv)])
            if (h_uncolored(e)) return true;
        return false;
    }

    int tree_of_foot(EdgeId h) const {
        const HEdge& e = he(h);
        return c.is_tree_vertex(e.a) ? e.a : (c.is_tree_vertex(e.b) ? e.b : -1);
    }

    int other_endpoint(EdgeId h, int hv) const { return he(h).a == hv ? he(h).b : he(h).a; }

    VertexId foot_of(EdgeId ge, int tree) const { return c.foot(ge, tree, g); }

    /// Smallest tree child reached over a two_edge; the same pick rule 2 uses.
    int tree_child_pick(int hv) const {
        for (int ch : sk.children[static_cast<size_t>(hv)]) {
            if (!c.is_tree_vertex(ch)) continue;
            EdgeId pe = sk.parent_edge[static_cast<size_t>(ch)];
            if (is_two(pe)) return ch;
        }
        return -1;
    }

    RuleEvent::Spoke make_spoke(EdgeId h, bool colored_here) const {
        RuleEvent::Spoke s;
        s.h_edge = h;
        int tr = tree_of_foot(h);
        s.other = tr >= 0 ? other_endpoint(h, tr) : he(h).b;
        s.rep1 = he(h).rep1;
        if (tr >= 0) s.foot1 = foot_of(s.rep1, tr);
        if (is_two(h)) {
            s.rep2 = he(h).rep2;
            s.foot2 = foot_of(s.rep2, tr);
        }
        s.colored_here = colored_here;
        return s;
    }

    /// Spoke with rep1 arranged to land on the given foot.
    RuleEvent::Spoke make_spoke_at(EdgeId h, VertexId foot, bool colored_here) const {
        RuleEvent::Spoke s = make_spoke(h, colored_here);
        if (s.foot1 != foot) {
            if (s.foot2 != foot)
                throw InvariantViolation("foot " + std::to_string(foot) + " not on H edge " +
                                         std::to_string(h));
            std::swap(s.foot1, s.foot2);
            std::swap(s.rep1, s.rep2);
        }
        return s;
    }

    void check_invariants(const char* where) {
        if (!opts.check_invariants) return;
        for (EdgeId h = 0; h < c.h.edge_count(); ++h) {
            if (!is_two(h)) continue;
            bool a = col.assignment[static_cast<size_t>(he(h).rep1)] != 0;
            bool b = col.assignment[static_cast<size_t>(he(h).rep2)] != 0;
            if (a != b)
                throw InvariantViolation(std::string("invariant 2 violated after ") + where);
        }
        std::map<int, int> count;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (col.assignment[static_cast<size_t>(e)] != 0)
                ++count[col.assignment[static_cast<size_t>(e)]];
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv)) continue;
            for (EdgeId e : internal[static_cast<size_t>(hv)])
                if (count[col.assignment[static_cast<size_t>(e)]] != 1)
                    throw InvariantViolation(std::string("invariant 3 violated after ") + where +
                                             " at tree " + std::to_string(hv));
        }
    }

    // ---------------- rule 1: forest colors ----------------

    void rule1() {
        int next = 1;
        for (int tr = 0; tr < t; ++tr)
            for (EdgeId e : internal[static_cast<size_t>(tr)]) {
                set_color(e, next++, Rule::forest);
            }
        if (next - 1 != f - t) throw InvariantViolation("forest edge count mismatch");
        RuleEvent ev;
        ev.rule = Rule::forest;
        events.push_back(ev);
        check_invariants("rule 1");
    }

    // ---------------- rule 2: single-representative edges ----------------

    void rule2() {
        for (EdgeId h = 0; h < c.h.edge_count(); ++h) {
            if (!sk.b1_edge[static_cast<size_t>(h)] || is_two(h)) continue;
            int child = sk.parent_edge[static_cast<size_t>(he(h).a)] == h ? he(h).a : he(h).b;
            int source;
            if (c.is_tree_vertex(child)) {
                source = child;
            } else {
                source = tree_child_pick(child);
                if (source < 0)
                    throw LemmaViolation("one-edge-tree-child",
                                         "non-tree vertex " + std::to_string(child) +
                                             " has no tree child over a two_edge");
            }
            apply_same(h, surplus_color(f, t, source), Rule::one_edge);
            RuleEvent ev;
            ev.rule = Rule::one_edge;
            ev.target = child;
            ev.h_edge = h;
            events.push_back(ev);
            check_invariants("rule 2");
        }
    }

    // ---------------- rule 3: trees with >= 4 incident 2-edges ----------------

    std::vector<RuleEvent::Spoke> two_edge_spokes(int hv) const {
        std::vector<RuleEvent::Spoke> sp;
        for (EdgeId e : incident[static_cast<size_t>(hv)])
            if (is_two(e)) sp.push_back(make_spoke(e, true));
        std::sort(sp.begin(), sp.end(),
                  [](const RuleEvent::Spoke& x, const RuleEvent::Spoke& y) { return x.other < y.other; });
        return sp;
    }

    std::vector<int> spoke_surpluses(int hv, const std::vector<RuleEvent::Spoke>& sp) const {
        std::vector<int> cs;
        std::set<int> seen;
        for (const auto& s : sp) {
            int tr = closest_tree_vertex_ct(c, sk, hv, s.other);
            if (!seen.insert(tr).second)
                throw InvariantViolation("repeated nearest tree across branches of " +
                                         std::to_string(hv));
            cs.push_back(surplus_color(f, t, tr));
        }
        return cs;
    }

    void rule3() {
        for (int hv = 0; hv < t; ++hv) {
            if (two_degree(hv) < 4) continue;
            auto sp = two_edge_spokes(hv);
            auto cs = spoke_surpluses(hv, sp);
            int q = static_cast<int>(sp.size());
            for (int i = 0; i < q; ++i)
                apply_split(sp[static_cast<size_t>(i)].h_edge, cs[static_cast<size_t>((i + 2) % q)],
                            cs[static_cast<size_t>((i + 3) % q)], Rule::fan_rotate);
            RuleEvent ev;
            ev.rule = Rule::fan_rotate;
            ev.target = hv;
            ev.spokes = std::move(sp);
            events.push_back(ev);
            check_invariants("rule 3");
        }
    }

    // ---------------- rule 4: trees with exactly 3 incident 2-edges ----------------

    std::vector<char> cut_side_of(int hv, EdgeId cut) const {
        std::vector<char> side(static_cast<size_t>(g.vertex_count()), 0);
        VertexId start = g.edge(cut).u;
        side[static_cast<size_t>(start)] = 1;
        std::vector<VertexId> stack{start};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (c.tree_of_vertex(w) != hv || side[static_cast<size_t>(w)]) continue;
                auto e = g.edge_between(v, w);
                if (*e == cut) continue;
                side[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        return side;
    }

    int dist_in_tree(int hv, VertexId x, VertexId y) const {
        return static_cast<int>(tree_path(g, c.tree_vertices[static_cast<size_t>(hv)], x, y).edges.size());
    }

    void rule4() {
        for (int hv = 0; hv < t; ++hv) {
            if (two_degree(hv) != 3) continue;
            auto sp = two_edge_spokes(hv);
            auto cs = spoke_surpluses(hv, sp);
            std::vector<std::vector<EdgeId>> paths;
            for (const auto& s : sp) {
                auto p = foot_path(g, c, s.h_edge).edges;
                std::sort(p.begin(), p.end());
                paths.push_back(std::move(p));
            }

            RuleEvent ev;
            ev.rule = Rule::fan_three;
            ev.target = hv;

            EdgeId cut = -1;
            std::vector<char> side;
            for (EdgeId e : internal[static_cast<size_t>(hv)]) {
                side = cut_side_of(hv, e);
                bool ok = true;
                for (const auto& s : sp)
                    if (side[static_cast<size_t>(s.foot1)] == side[static_cast<size_t>(s.foot2)]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    cut = e;
                    break;
                }
            }

            if (cut >= 0) {
                ev.case_id = 1;
                for (auto& s : sp)
                    if (!side[static_cast<size_t>(s.foot1)]) {
                        std::swap(s.foot1, s.foot2);
                        std::swap(s.rep1, s.rep2);
                    }
                int cc = col.color(cut);
                // rep1 lands inside the cut side, rep2 outside.
                apply_spoke_split(sp[0], cs[2], cs[1], Rule::fan_three);
                apply_spoke_split(sp[1], cc, cs[0], Rule::fan_three);
                apply_spoke_split(sp[2], cc, cc, Rule::fan_three);
                ev.donors = {cut};
                ev.cut_side = side;
            } else {
                EdgeId d1 = -1, d2 = -1, d3 = -1;
                for (EdgeId e1 : paths[0]) {
                    for (EdgeId e2 : paths[1]) {
                        if (e2 == e1) continue;
                        for (EdgeId e3 : paths[2]) {
                            if (e3 == e1 || e3 == e2) continue;
                            d1 = e1;
                            d2 = e2;
                            d3 = e3;
                            break;
                        }
                        if (d1 >= 0) break;
                    }
                    if (d1 >= 0) break;
                }
                if (d1 >= 0) {
                    ev.case_id = 2;
                    apply_same(sp[0].h_edge, col.color(d1), Rule::fan_three);
                    apply_same(sp[1].h_edge, col.color(d2), Rule::fan_three);
                    apply_same(sp[2].h_edge, col.color(d3), Rule::fan_three);
                    ev.donors = {d1, d2, d3};
                } else {
                    rule4_degenerate(hv, sp, paths, ev);
                }
            }
            ev.spokes = std::move(sp);
            events.push_back(ev);
            check_invariants("rule 4");
        }
    }

    static bool edge_sets_disjoint(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
        for (EdgeId e : a)
            if (std::binary_search(b.begin(), b.end(), e)) return false;
        return true;
    }

    /// No distinct representatives: two foot paths are edge-disjoint and one of
    /// them is a single edge shared with the third path.
    void rule4_degenerate(int hv, std::vector<RuleEvent::Spoke>& sp,
                          std::vector<std::vector<EdgeId>>& paths, RuleEvent& ev) {
        ev.case_id = 3;
        int pi = -1, pj = -1;
        const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& pr : pairs)
            if (edge_sets_disjoint(paths[static_cast<size_t>(pr[0])], paths[static_cast<size_t>(pr[1])])) {
                pi = pr[0];
                pj = pr[1];
                break;
            }
        if (pi < 0)
            throw LemmaViolation("fan3-disjoint-pair",
                                 "no representatives and no disjoint foot-path pair at tree " +
                                     std::to_string(hv));
        int pk = 3 - pi - pj;
        std::vector<RuleEvent::Spoke> nsp{sp[static_cast<size_t>(pi)], sp[static_cast<size_t>(pj)],
                                          sp[static_cast<size_t>(pk)]};
        std::vector<std::vector<EdgeId>> np{paths[static_cast<size_t>(pi)],
                                            paths[static_cast<size_t>(pj)],
                                            paths[static_cast<size_t>(pk)]};
        if (edge_sets_disjoint(np[2], np[0])) {
            std::swap(nsp[0], nsp[1]);
            std::swap(np[0], np[1]);
        }
        if (np[0].size() != 1)
            throw LemmaViolation("fan3-shape", "expected a single-edge foot path at tree " +
                                                   std::to_string(hv));
        EdgeId e1 = np[0][0];
        // Endpoint of e1 nearer the second foot path becomes the inner foot.
        VertexId x = g.edge(e1).u, y = g.edge(e1).v;
        auto p2 = foot_path(g, c, nsp[1].h_edge);
        int dx = g.vertex_count(), dy = g.vertex_count();
        for (VertexId w : p2.vertices) {
            dx = std::min(dx, dist_in_tree(hv, x, w));
            dy = std::min(dy, dist_in_tree(hv, y, w));
        }
        if (dx == dy)
            throw LemmaViolation("fan3-shape", "foot-path edge equidistant from second path");
        VertexId u1 = dx < dy ? y : x;  // the farther endpoint; the nearer one is v1
        nsp[0] = make_spoke_at(nsp[0].h_edge, u1, true);
        if (!std::binary_search(np[2].begin(), np[2].end(), e1))
            throw LemmaViolation("fan3-shape", "third foot path misses the shared edge");
        if (nsp[2].foot1 != u1 && nsp[2].foot2 != u1)
            throw LemmaViolation("fan3-shared-foot", "third foot path does not end at " +
                                                         std::to_string(u1));
        nsp[2] = make_spoke_at(nsp[2].h_edge, u1, true);
        EdgeId e2 = np[1][0];
        apply_same(nsp[0].h_edge, col.color(e1), Rule::fan_three);
        apply_same(nsp[1].h_edge, col.color(e2), Rule::fan_three);
        apply_spoke_split(nsp[2], col.color(e2), col.color(e1), Rule::fan_three);
        ev.donors = {e1, e2};
        sp = std::move(nsp);
    }

    // ---------------- rule 5: non-tree vertices of degree >= 3 ----------------

    void rule5() {
        for (int hv = t; hv < c.h.vertex_count(); ++hv) {
            if (!sk.in_b1_vertex(hv) || sk.b1_degree[static_cast<size_t>(hv)] < 3) continue;
            std::vector<int> kids;
            for (int ch : sk.children[static_cast<size_t>(hv)])
                if (!sk.in_leaf_s[static_cast<size_t>(ch)]) kids.push_back(ch);
            EdgeId pe = sk.parent_edge[static_cast<size_t>(hv)];
            if (!is_two(pe)) {
                int pick = tree_child_pick(hv);
                if (pick < 0)
                    throw LemmaViolation("one-edge-tree-child",
                                         "hub " + std::to_string(hv) +
                                             " with a single-representative outgoing edge has no "
                                             "tree child over a two_edge");
                auto it = std::find(kids.begin(), kids.end(), pick);
                std::rotate(kids.begin(), it, it + 1);
            }
            if (kids.size() < 2) throw InvariantViolation("hub with fewer than two children");

            std::vector<int> trs;
            std::set<int> seen;
            for (int ch : kids) {
                trs.push_back(closest_tree_vertex_ct(c, sk, hv, ch));
                if (!seen.insert(trs.back()).second)
                    throw InvariantViolation("repeated nearest tree across branches of " +
                                             std::to_string(hv));
            }
            RuleEvent ev;
            ev.rule = Rule::hub;
            ev.target = hv;
            for (size_t i = 0; i < kids.size(); ++i) {
                EdgeId e = sk.parent_edge[static_cast<size_t>(kids[i])];
                bool fresh = h_uncolored(e);
                if (fresh) {
                    if (!is_two(e)) throw InvariantViolation("uncolored single-representative edge");
                    if (i == 0)
                        apply_split(e, surplus_color(f, t, trs[0]), surplus_color(f, t, trs[1]),
                                    Rule::hub);
                    else
                        apply_same(e, surplus_color(f, t, trs[i]), Rule::hub);
                }
                ev.spokes.push_back(make_spoke(e, fresh));
            }
            bool fresh = h_uncolored(pe);
            if (fresh) {
                if (!is_two(pe)) throw InvariantViolation("uncolored single-representative edge");
                apply_split(pe, surplus_color(f, t, trs[0]), surplus_color(f, t, trs[1]), Rule::hub);
            }
            ev.spokes.push_back(make_spoke(pe, fresh));
            events.push_back(ev);
            check_invariants("rule 5");
        }
    }

    // ---------------- rule 6: single incident 2-edge ----------------

    void rule6() {
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv) || two_degree(hv) != 1) continue;
            EdgeId e = -1;
            for (EdgeId x : incident[static_cast<size_t>(hv)])
                if (is_two(x)) e = x;
            if (e < 0 || !h_uncolored(e)) throw InvariantViolation("stray incomplete tree");
            auto fp = foot_path(g, c, e).edges;
            EdgeId donor = *std::min_element(fp.begin(), fp.end());
            apply_same(e, col.color(donor), Rule::solo_two_edge);
            col.color_giving_edge[hv] = donor;
            RuleEvent ev;
            ev.rule = Rule::solo_two_edge;
            ev.target = hv;
            ev.h_edge = e;
            ev.spokes.push_back(make_spoke(e, true));
            ev.donors = {donor};
            events.push_back(ev);
            check_invariants("rule 6");
        }
    }

    // ---------------- rule 7: two 2-edges into a tree with >= 2 edges ----------------

    void rule7() {
        for (int hv = 0; hv < t; ++hv) {
            if (two_degree(hv) != 2 || internal[static_cast<size_t>(hv)].size() < 2) continue;
            std::vector<EdgeId> twos;
            for (EdgeId x : incident[static_cast<size_t>(hv)])
                if (is_two(x)) twos.push_back(x);
            bool fresh1 = h_uncolored(twos[0]), fresh2 = h_uncolored(twos[1]);
            auto p1 = foot_path(g, c, twos[0]).edges;
            auto p2 = foot_path(g, c, twos[1]).edges;
            std::sort(p1.begin(), p1.end());
            std::sort(p2.begin(), p2.end());
            std::vector<EdgeId> uni;
            std::set_union(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(uni));

            RuleEvent ev;
            ev.rule = Rule::twin_foot_paths;
            ev.target = hv;
            if (uni.size() >= 2) {
                ev.case_id = 1;
                EdgeId d1 = -1, d2 = -1;
                for (EdgeId a : p1) {
                    for (EdgeId b : p2)
                        if (b != a) {
                            d1 = a;
                            d2 = b;
                            break;
                        }
                    if (d1 >= 0) break;
                }
                if (d1 < 0) throw InvariantViolation("no distinct donors in a two-edge union");
                if (fresh1) apply_same(twos[0], col.color(d1), Rule::twin_foot_paths);
                if (fresh2) apply_same(twos[1], col.color(d2), Rule::twin_foot_paths);
                ev.donors = {d1, d2};
                ev.spokes.push_back(make_spoke(twos[0], fresh1));
                ev.spokes.push_back(make_spoke(twos[1], fresh2));
            } else {
                // Both foot paths are the same single edge; recruit the nearest
                // other tree edge and split around the shared edge.
                ev.case_id = 2;
                EdgeId e = uni[0];
                EdgeId ed = -1;
                for (EdgeId x : internal[static_cast<size_t>(hv)])
                    if (x != e) {
                        ed = x;
                        break;
                    }
                VertexId x = g.edge(e).u, y = g.edge(e).v;
                VertexId ex = g.edge(ed).u;
                int dx = std::min(dist_in_tree(hv, x, ex), dist_in_tree(hv, x, g.edge(ed).v));
                int dy = std::min(dist_in_tree(hv, y, ex), dist_in_tree(hv, y, g.edge(ed).v));
                VertexId v = dx < dy ? x : y;  // nearer the recruited edge
                VertexId u = dx < dy ? y : x;
                if (fresh1) apply_same(twos[0], col.color(e), Rule::twin_foot_paths);
                if (fresh2) {
                    const HEdge& z = he(twos[1]);
                    EdgeId rep_u = foot_of(z.rep1, hv) == u ? z.rep1 : z.rep2;
                    EdgeId rep_v = rep_u == z.rep1 ? z.rep2 : z.rep1;
                    set_color(rep_u, col.color(ed), Rule::twin_foot_paths);
                    set_color(rep_v, col.color(e), Rule::twin_foot_paths);
                }
                ev.donors = {e, ed};
                ev.u = u;
                ev.v = v;
                ev.spokes.push_back(make_spoke_at(twos[0], u, fresh1));
                ev.spokes.push_back(make_spoke_at(twos[1], u, fresh2));
            }
            events.push_back(ev);
            check_invariants("rule 7");
        }
    }

    // ---------------- rule 8: single-edge tree on a vertex of degree >= 3 ----------------

    void rule8() {
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv) || sk.b1_degree[static_cast<size_t>(hv)] < 3) continue;
            if (two_degree(hv) != 2 || internal[static_cast<size_t>(hv)].size() != 1)
                throw LemmaViolation("tiny-tree-shape",
                                     "leftover tree " + std::to_string(hv) +
                                         " is not a single edge with two incident two_edges");
            EdgeId te = internal[static_cast<size_t>(hv)][0];
            std::vector<EdgeId> twos;
            for (EdgeId x : incident[static_cast<size_t>(hv)])
                if (is_two(x)) twos.push_back(x);
            EdgeId pe = hv == sk.root ? -1 : sk.parent_edge[static_cast<size_t>(hv)];
            int c2 = col.color(te);

            RuleEvent ev;
            ev.rule = Rule::tiny_tree_hub;
            ev.target = hv;
            ev.donors = {te};
            VertexId u, v;
            EdgeId ey, ez;
            int cy;  // color of the rep landing on u from the y side
            if (pe >= 0 && is_two(pe)) {
                ey = pe;
                ez = twos[0] == pe ? twos[1] : twos[0];
                ev.case_id = 2;
                EdgeId low1 = -1;
                for (EdgeId x : incident[static_cast<size_t>(hv)])
                    if (!is_two(x)) {
                        low1 = x;
                        break;
                    }
                if (low1 < 0)
                    throw LemmaViolation("tiny-tree-shape", "no single-representative edge at tree " +
                                                                std::to_string(hv));
                cy = col.color(he(low1).rep1);
                if (cy == 0) throw InvariantViolation("uncolored single-representative edge");
                v = foot_of(he(low1).rep1, hv);
                u = g.other_end(te, v);
            } else {
                ey = twos[0];
                ez = twos[1];
                if (pe >= 0) {
                    ev.case_id = 1;
                    cy = surplus_color(f, t, hv);
                    v = foot_of(he(pe).rep1, hv);
                    u = g.other_end(te, v);
                } else {
                    ev.case_id = 3;  // root: no outgoing edge pins the split foot
                    cy = surplus_color(f, t, hv);
                    u = g.edge(te).u;
                    v = g.edge(te).v;
                }
            }
            bool fy = h_uncolored(ey), fz = h_uncolored(ez);
            if (fy) {
                const HEdge& z = he(ey);
                EdgeId rep_u = foot_of(z.rep1, hv) == u ? z.rep1 : z.rep2;
                EdgeId rep_v = rep_u == z.rep1 ? z.rep2 : z.rep1;
                set_color(rep_u, cy, Rule::tiny_tree_hub);
                set_color(rep_v, c2, Rule::tiny_tree_hub);
            }
            if (fz) apply_same(ez, c2, Rule::tiny_tree_hub);
            ev.u = u;
            ev.v = v;
            ev.spokes.push_back(make_spoke_at(ey, u, fy));
            ev.spokes.push_back(make_spoke_at(ez, u, fz));
            events.push_back(ev);
            check_invariants("rule 8");
        }
        post_rule8_shape_check();
    }

    void post_rule8_shape_check() {
        for (EdgeId h = 0; h < c.h.edge_count(); ++h) {
            if (!sk.b1_edge[static_cast<size_t>(h)] || !h_uncolored(h)) continue;
            if (!is_two(h))
                throw InvariantViolation("uncolored single-representative edge after rule 8");
            int tr = tree_of_foot(h);
            int sv = other_endpoint(h, tr);
            if (sk.b1_degree[static_cast<size_t>(tr)] != 2 ||
                sk.b1_degree[static_cast<size_t>(sv)] != 2 || two_degree(tr) != 2 ||
                internal[static_cast<size_t>(tr)].size() != 1)
                throw LemmaViolation("post-tiny-hub-chain-shape",
                                     "uncolored two_edge " + std::to_string(h) +
                                         " not on a degree-2 chain of single-edge trees");
        }
    }

    // ---------------- rule 9: one remaining 2-edge at a tree ----------------

    void rule9() {
        std::vector<std::pair<int, EdgeId>> todo;
        for (int hv = 0; hv < t; ++hv) {
            std::vector<EdgeId> open;
            for (EdgeId x : incident[static_cast<size_t>(hv)])
                if (h_uncolored(x)) open.push_back(x);
            if (open.size() == 1) todo.emplace_back(hv, open[0]);
        }
        for (auto [hv, e] : todo) {
            EdgeId te = internal[static_cast<size_t>(hv)][0];
            apply_same(e, col.color(te), Rule::last_uncolored);
            RuleEvent ev;
            ev.rule = Rule::last_uncolored;
            ev.target = hv;
            ev.h_edge = e;
            ev.u = g.edge(te).u;
            ev.v = g.edge(te).v;
            ev.donors = {te};
            ev.spokes.push_back(make_spoke(e, true));
            events.push_back(ev);
            check_invariants("rule 9");
        }
        post_rule9_shape_check();
    }

    void post_rule9_shape_check() {
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv)) continue;
            const auto& inc = incident[static_cast<size_t>(hv)];
            bool ok = inc.size() == 2 && internal[static_cast<size_t>(hv)].size() == 1;
            for (EdgeId x : inc)
                ok = ok && is_two(x) && h_uncolored(x) &&
                     sk.b1_degree[static_cast<size_t>(other_endpoint(x, hv))] == 2;
            if (!ok)
                throw LemmaViolation("post-last-chain-shape",
                                     "incomplete tree " + std::to_string(hv) +
                                         " is not an interior chain tree");
        }
    }

    // ---------------- rules 10/11: chain completion ----------------

    struct ChainParts {
        EdgeId out;     // outgoing two_edge
        int parent;     // non-tree vertex above
        EdgeId in;      // incoming two_edge
        int child;      // non-tree vertex below
        EdgeId te;      // the tree's single edge
    };

    ChainParts chain_parts(int hv) {
        ChainParts cp;
        cp.out = sk.parent_edge[static_cast<size_t>(hv)];
        cp.parent = sk.parent[static_cast<size_t>(hv)];
        cp.child = -1;
        for (int ch : sk.children[static_cast<size_t>(hv)])
            if (!sk.in_leaf_s[static_cast<size_t>(ch)]) {
                if (cp.child >= 0) throw InvariantViolation("chain tree with two children");
                cp.child = ch;
            }
        if (cp.child < 0) throw InvariantViolation("chain tree without a child");
        cp.in = sk.parent_edge[static_cast<size_t>(cp.child)];
        cp.te = internal[static_cast<size_t>(hv)][0];
        return cp;
    }

    void chain_event(Rule rule, int hv, int case_id, EdgeId e1, EdgeId e2, EdgeId te,
                     EdgeId shortcut) {
        RuleEvent ev;
        ev.rule = rule;
        ev.target = hv;
        ev.case_id = case_id;
        ev.donors = {te};
        ev.shortcut = shortcut;
        VertexId u1 = foot_of(he(e1).rep1, hv);
        ev.u = u1;
        ev.v = g.other_end(te, u1);
        ev.spokes.push_back(make_spoke_at(e1, u1, true));
        ev.spokes.push_back(make_spoke_at(e2, u1, true));
        events.push_back(ev);
    }

    void rule10() {
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv) || hv == sk.root) continue;
            int par = sk.parent[static_cast<size_t>(hv)];
            if (!is_two(sk.parent_edge[static_cast<size_t>(par)])) continue;
            ChainParts cp = chain_parts(hv);
            apply_same(cp.out, surplus_color(f, t, hv), Rule::chain_two_edge);
            apply_same(cp.in, col.color(cp.te), Rule::chain_two_edge);
            r10_applied[static_cast<size_t>(hv)] = 1;
            chain_event(Rule::chain_two_edge, hv, 0, cp.out, cp.in, cp.te, -1);
            check_invariants("rule 10");
        }
    }

    void rule11() {
        for (int hv = 0; hv < t; ++hv) {
            if (!incomplete(hv)) continue;
            if (hv == sk.root) {
                rule11_root(hv);
                continue;
            }
            ChainParts cp = chain_parts(hv);
            if (is_two(sk.parent_edge[static_cast<size_t>(cp.parent)]))
                throw InvariantViolation("chain under a two_edge left to rule 11");
            VertexId pg = c.g_of_outside(cp.parent);
            VertexId cg = c.g_of_outside(cp.child);
            auto sc = g.edge_between(pg, cg);
            if (sc.has_value()) {
                if (col.assignment[static_cast<size_t>(*sc)] != 0)
                    throw LemmaViolation("shortcut-uncolored",
                                         "shortcut edge " + std::to_string(*sc) +
                                             " already carries a color");
                apply_same(cp.out, col.color(cp.te), Rule::chain_final);
                apply_same(cp.in, col.color(cp.te), Rule::chain_final);
                set_color(*sc, col.color(cp.te), Rule::chain_final);
                col.shortcut_edges.push_back(*sc);
                chain_event(Rule::chain_final, hv, 1, cp.out, cp.in, cp.te, *sc);
            } else {
                int below = -1;
                for (int ch : sk.children[static_cast<size_t>(cp.child)])
                    if (!sk.in_leaf_s[static_cast<size_t>(ch)]) below = ch;
                if (below < 0) throw InvariantViolation("chain bottom without a child");
                EdgeId eb = sk.parent_edge[static_cast<size_t>(below)];
                if (!is_two(eb) || !c.is_tree_vertex(below))
                    throw LemmaViolation("chain-top-incoming-two-edge",
                                         "edge below the chain of tree " + std::to_string(hv) +
                                             " is not a two_edge into a tree");
                if (r10_applied[static_cast<size_t>(below)])
                    throw LemmaViolation("chain-top-below-not-r10",
                                         "tree " + std::to_string(below) +
                                             " below the chain already spent its surplus");
                apply_same(cp.out, surplus_color(f, t, below), Rule::chain_final);
                apply_same(cp.in, col.color(cp.te), Rule::chain_final);
                chain_event(Rule::chain_final, hv, 2, cp.out, cp.in, cp.te, -1);
            }
            check_invariants("rule 11");
        }
        for (EdgeId h = 0; h < c.h.edge_count(); ++h)
            if (sk.b1_edge[static_cast<size_t>(h)] && h_uncolored(h))
                throw InvariantViolation("skeleton edge " + std::to_string(h) +
                                         " left uncolored");
    }

    void rule11_root(int hv) {
        std::vector<int> kids;
        for (int ch : sk.children[static_cast<size_t>(hv)])
            if (!sk.in_leaf_s[static_cast<size_t>(ch)]) kids.push_back(ch);
        if (kids.size() != 2) throw InvariantViolation("incomplete root without two children");
        EdgeId ea = sk.parent_edge[static_cast<size_t>(kids[0])];
        EdgeId eb = sk.parent_edge[static_cast<size_t>(kids[1])];
        EdgeId te = internal[static_cast<size_t>(hv)][0];
        apply_same(ea, surplus_color(f, t, hv), Rule::chain_root);
        apply_same(eb, col.color(te), Rule::chain_root);
        chain_event(Rule::chain_root, hv, 0, ea, eb, te, -1);
        check_invariants("rule 11");
    }

    // ---------------- rule 12: leaves of B ----------------

    void rule12() {
        for (int hv : sk.leaf_s) {
            EdgeId e = sk.parent_edge[static_cast<size_t>(hv)];
            if (!is_two(e))
                throw LemmaViolation("leaf-two-edge", "leaf " + std::to_string(hv) +
                                                          " attaches over a single edge");
            apply_split(e, f + 1, f + 2, Rule::global_leaf);
        }
        RuleEvent ev;
        ev.rule = Rule::global_leaf;
        events.push_back(ev);
    }

    Take3Run run() {
        rule1();
        rule2();
        rule3();
        rule4();
        rule5();
        rule6();
        rule7();
        rule8();
        rule9();
        rule10();
        rule11();
        rule12();
        int top = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (col.assignment[static_cast<size_t>(e)] == 0) {
                col.assignment[static_cast<size_t>(e)] = 1;
                col.provenance[static_cast<size_t>(e)] = Rule::filler;
            }
            top = std::max(top, col.assignment[static_cast<size_t>(e)]);
        }
        col.palette_size = top;
        if (top > f + 2) throw InvariantViolation("palette exceeded f+2");
        Take3Run out;
        out.coloring = std::move(col);
        out.events = std::move(events);
        out.forest_size = f;
        out.tree_count = t;
        return out;
    }
};

// ======================== witness replay ========================

struct Replay {
    const Graph& g;
    const Contraction& c;
    const Skeleton& sk;
    const Take3Run& run;
    const RainbowColoring& col;

    VertexId a, b;
    int ha, hb;
    std::vector<int> q_vertices;
    std::vector<char> on_q;                  // by H vertex
    std::vector<char> q_edge;                // by H edge
    std::vector<std::vector<EdgeId>> q_at;   // by H vertex

    std::vector<char> present;               // by graph edge
    std::set<int> used_colors;
    std::vector<EdgeId> members;
    std::map<int, std::vector<VertexId>> ports;
    std::set<int> resolved;

    Replay(const Graph& gr, const Contraction& ct, const Skeleton& skel, const Take3Run& r,
           VertexId av, VertexId bv)
        : g(gr), c(ct), sk(skel), run(r), col(r.coloring), a(av), b(bv) {
        ha = c.h_of_vertex[static_cast<size_t>(a)];
        hb = c.h_of_vertex[static_cast<size_t>(b)];
        on_q.assign(static_cast<size_t>(c.h.vertex_count()), 0);
        q_edge.assign(static_cast<size_t>(c.h.edge_count()), 0);
        q_at.resize(static_cast<size_t>(c.h.vertex_count()));
        present.assign(static_cast<size_t>(g.edge_count()), 0);

        int x = ha, y = hb;
        std::vector<int> left{x}, right{y};
        std::vector<EdgeId> left_e, right_e;
        while (x != y) {
            if (sk.level[static_cast<size_t>(x)] >= sk.level[static_cast<size_t>(y)]) {
                left_e.push_back(sk.parent_edge[static_cast<size_t>(x)]);
                x = sk.parent[static_cast<size_t>(x)];
                left.push_back(x);
            } else {
                right_e.push_back(sk.parent_edge[static_cast<size_t>(y)]);
                y = sk.parent[static_cast<size_t>(y)];
                right.push_back(y);
            }
        }
        q_vertices = left;
        for (size_t i = right.size() - 1; i-- > 0;) q_vertices.push_back(right[i]);
        std::vector<EdgeId> qe = left_e;
        qe.insert(qe.end(), right_e.rbegin(), right_e.rend());
        for (int hv : q_vertices) on_q[static_cast<size_t>(hv)] = 1;
        for (EdgeId e : qe) {
            q_edge[static_cast<size_t>(e)] = 1;
            q_at[static_cast<size_t>(c.h_edges[static_cast<size_t>(e)].a)].push_back(e);
            q_at[static_cast<size_t>(c.h_edges[static_cast<size_t>(e)].b)].push_back(e);
        }
    }

    const HEdge& he(EdgeId h) const { return c.h_edges[static_cast<size_t>(h)]; }
    bool is_two(EdgeId h) const { return he(h).is_two(); }

    bool segment_ok(const std::vector<EdgeId>& seg) const {
        std::set<int> seen;
        for (EdgeId e : seg) {
            if (present[static_cast<size_t>(e)]) return false;
            int cl = col.color(e);
            if (used_colors.count(cl) || !seen.insert(cl).second) return false;
        }
        return true;
    }

    void commit(const std::vector<EdgeId>& seg) {
        for (EdgeId e : seg) {
            present[static_cast<size_t>(e)] = 1;
            used_colors.insert(col.color(e));
            members.push_back(e);
            VertexId eu = g.edge(e).u, ev = g.edge(e).v;
            int tu = c.tree_of_vertex(eu), tv = c.tree_of_vertex(ev);
            if (tu >= 0 && tu != tv && on_q[static_cast<size_t>(tu)])
                ports[tu].push_back(eu);
            if (tv >= 0 && tv != tu && on_q[static_cast<size_t>(tv)])
                ports[tv].push_back(ev);
        }
    }

    bool try_commit(const std::vector<EdgeId>& seg) {
        if (!segment_ok(seg)) return false;
        commit(seg);
        return true;
    }

    void commit_or_throw(const std::vector<EdgeId>& seg, const char* check) {
        if (!try_commit(seg))
            throw LemmaViolation(check, std::string("replay segment rejected (") + check + ")");
    }

    std::vector<EdgeId> with_path(EdgeId rep, const TreePath& p) const {
        std::vector<EdgeId> seg{rep};
        seg.insert(seg.end(), p.edges.begin(), p.edges.end());
        return seg;
    }

    TreePath tpath(int hv, VertexId x, VertexId y) const {
        return tree_path(g, c.tree_vertices[static_cast<size_t>(hv)], x, y);
    }

    /// Q edges at hv other than skip; -1 when hv is a path endpoint.
    EdgeId other_q_edge(int hv, EdgeId skip) const {
        for (EdgeId e : q_at[static_cast<size_t>(hv)])
            if (e != skip) return e;
        return -1;
    }

    /// Connection point inside tree hv for the side away from the given edge:
    /// either the path endpoint inside the tree or the foot of the already
    /// placed representative of the tree's other Q edge.
    VertexId port_for_other(int hv, EdgeId skip) const {
        EdgeId other = other_q_edge(hv, skip);
        if (other < 0) {
            if (ha == hv) return a;
            if (hb == hv) return b;
            throw InvariantViolation("interior tree with a single Q edge");
        }
        const HEdge& o = he(other);
        if (present[static_cast<size_t>(o.rep1)]) return c.foot(o.rep1, hv, g);
        if (o.is_two() && present[static_cast<size_t>(o.rep2)]) return c.foot(o.rep2, hv, g);
        throw InvariantViolation("neighbor representative not placed yet at tree " +
                                 std::to_string(hv));
    }

    EdgeId spoke_rep_at(const RuleEvent::Spoke& s, VertexId p) const {
        if (s.foot1 == p) return s.rep1;
        if (s.foot2 == p) return s.rep2;
        return -1;
    }

    void maintenance() {
        for (int hv : q_vertices) {
            if (!c.is_tree_vertex(hv) || resolved.count(hv)) continue;
            std::vector<VertexId> pts = ports.count(hv) ? ports[hv] : std::vector<VertexId>{};
            if (ha == hv) pts.push_back(a);
            if (hb == hv) pts.push_back(b);
            if (pts.size() < 2) continue;
            if (pts.size() > 2) throw InvariantViolation("more than two ports at tree " +
                                                         std::to_string(hv));
            if (pts[0] != pts[1]) commit_or_throw(tpath(hv, pts[0], pts[1]).edges, "tree-join");
            resolved.insert(hv);
        }
    }

    // ---------------- per-event handlers ----------------

    void on_one_edge(const RuleEvent& ev) {
        if (!q_edge[static_cast<size_t>(ev.h_edge)]) return;
        commit_or_throw({he(ev.h_edge).rep1}, "one-edge-rep");
    }

    std::vector<const RuleEvent::Spoke*> q_spokes(const RuleEvent& ev) const {
        std::vector<const RuleEvent::Spoke*> out;
        for (const auto& s : ev.spokes)
            if (q_edge[static_cast<size_t>(s.h_edge)]) out.push_back(&s);
        return out;
    }

    void fan_pair(int hv, const RuleEvent::Spoke& si, const RuleEvent::Spoke& sj,
                  const char* check) {
        const std::pair<int, int> combos[4] = {{1, 1}, {2, 2}, {2, 1}, {1, 2}};
        for (auto [x, y] : combos) {
            VertexId fx = x == 1 ? si.foot1 : si.foot2;
            EdgeId rx = x == 1 ? si.rep1 : si.rep2;
            VertexId fy = y == 1 ? sj.foot1 : sj.foot2;
            EdgeId ry = y == 1 ? sj.rep1 : sj.rep2;
            std::vector<EdgeId> seg{rx};
            if (fx != fy) {
                auto p = tpath(hv, fx, fy);
                seg.insert(seg.end(), p.edges.begin(), p.edges.end());
            }
            seg.push_back(ry);
            if (try_commit(seg)) return;
        }
        throw LemmaViolation(check, std::string("no valid fan pair connection (") + check + ")");
    }

    void fan_port(int hv, const RuleEvent::Spoke& s, VertexId p0, const char* check) {
        for (int side = 1; side <= 2; ++side) {
            VertexId fx = side == 1 ? s.foot1 : s.foot2;
            EdgeId rx = side == 1 ? s.rep1 : s.rep2;
            std::vector<EdgeId> seg{rx};
            if (fx != p0) {
                auto p = tpath(hv, fx, p0);
                seg.insert(seg.end(), p.edges.begin(), p.edges.end());
            }
            if (try_commit(seg)) return;
        }
        throw LemmaViolation(check, std::string("no valid fan port connection (") + check + ")");
    }

    void on_fan_rotate(const RuleEvent& ev) {
        int hv = ev.target;
        if (resolved.count(hv)) return;
        auto qs = q_spokes(ev);
        if (qs.empty()) return;
        if (qs.size() == 2) {
            fan_pair(hv, *qs[0], *qs[1], "fan-pair-path");
        } else {
            fan_port(hv, *qs[0], port_for_other(hv, qs[0]->h_edge), "fan-port-path");
        }
        resolved.insert(hv);
    }

    void on_fan_three(const RuleEvent& ev) {
        int hv = ev.target;
        if (resolved.count(hv)) return;
        auto qs = q_spokes(ev);
        if (qs.empty()) return;
        auto pos = [&](const RuleEvent::Spoke* s) {
            return static_cast<int>(s - ev.spokes.data());
        };
        if (ev.case_id == 1) {
            // rep1 lands inside the cut side.
            if (qs.size() == 2) {
                int i = pos(qs[0]), j = pos(qs[1]);
                int side = (i == 0 && j == 1) ? 1 : 2;
                const auto& si = *qs[0];
                const auto& sj = *qs[1];
                VertexId fx = side == 1 ? si.foot1 : si.foot2;
                EdgeId rx = side == 1 ? si.rep1 : si.rep2;
                VertexId fy = side == 1 ? sj.foot1 : sj.foot2;
                EdgeId ry = side == 1 ? sj.rep1 : sj.rep2;
                std::vector<EdgeId> seg{rx};
                if (fx != fy) {
                    auto p = tpath(hv, fx, fy);
                    seg.insert(seg.end(), p.edges.begin(), p.edges.end());
                }
                seg.push_back(ry);
                commit_or_throw(seg, "fan3-cut-path");
            } else {
                const auto& s = *qs[0];
                VertexId p0 = port_for_other(hv, s.h_edge);
                bool inside = ev.cut_side[static_cast<size_t>(p0)] != 0;
                int i = pos(qs[0]);
                int side;
                if (inside)
                    side = (i == 1) ? 2 : 1;
                else
                    side = 2;
                VertexId fx = side == 1 ? s.foot1 : s.foot2;
                EdgeId rx = side == 1 ? s.rep1 : s.rep2;
                std::vector<EdgeId> seg{rx};
                if (fx != p0) {
                    auto p = tpath(hv, fx, p0);
                    seg.insert(seg.end(), p.edges.begin(), p.edges.end());
                }
                commit_or_throw(seg, "fan3-cut-port");
            }
        } else if (ev.case_id == 2) {
            if (qs.size() == 2) {
                int i = pos(qs[0]), j = pos(qs[1]);
                EdgeId di = ev.donors[static_cast<size_t>(i)];
                EdgeId dj = ev.donors[static_cast<size_t>(j)];
                const std::pair<int, int> combos[4] = {{1, 1}, {2, 2}, {2, 1}, {1, 2}};
                bool done = false;
                for (auto [x, y] : combos) {
                    const auto& si = *qs[0];
                    const auto& sj = *qs[1];
                    VertexId fx = x == 1 ? si.foot1 : si.foot2;
                    EdgeId rx = x == 1 ? si.rep1 : si.rep2;
                    VertexId fy = y == 1 ? sj.foot1 : sj.foot2;
                    EdgeId ry = y == 1 ? sj.rep1 : sj.rep2;
                    std::vector<EdgeId> seg{rx};
                    bool bad = false;
                    if (fx != fy) {
                        auto p = tpath(hv, fx, fy);
                        for (EdgeId e : p.edges)
                            if (e == di || e == dj) bad = true;
                        seg.insert(seg.end(), p.edges.begin(), p.edges.end());
                    }
                    seg.push_back(ry);
                    if (!bad && try_commit(seg)) {
                        done = true;
                        break;
                    }
                }
                if (!done)
                    throw LemmaViolation("fan3-sdr-path", "no donor-avoiding fan connection");
            } else {
                const auto& s = *qs[0];
                VertexId p0 = port_for_other(hv, s.h_edge);
                EdgeId d = ev.donors[static_cast<size_t>(pos(qs[0]))];
                auto p = path_avoiding_edge(g, c.tree_vertices[static_cast<size_t>(hv)], p0,
                                            s.foot1, s.foot2, d);
                EdgeId rep = p.vertices.back() == s.foot1 ? s.rep1 : s.rep2;
                commit_or_throw(with_path(rep, p), "fan3-sdr-port");
            }
        } else {
            on_fan_three_degenerate(ev, qs);
        }
        resolved.insert(hv);
    }

    void on_fan_three_degenerate(const RuleEvent& ev, std::vector<const RuleEvent::Spoke*>& qs) {
        int hv = ev.target;
        EdgeId e2 = ev.donors[1];
        auto pos = [&](const RuleEvent::Spoke* s) {
            return static_cast<int>(s - ev.spokes.data());
        };
        // Connection into the long second path avoiding its donor edge.
        auto avoid_into = [&](VertexId from, const RuleEvent::Spoke& s) {
            auto p = path_avoiding_edge(g, c.tree_vertices[static_cast<size_t>(hv)], from,
                                        s.foot1, s.foot2, e2);
            EdgeId rep = p.vertices.back() == s.foot1 ? s.rep1 : s.rep2;
            return with_path(rep, p);
        };
        auto nearer_foot = [&](VertexId from, const RuleEvent::Spoke& s) {
            int d1 = static_cast<int>(tpath(hv, from, s.foot1).edges.size());
            int d2 = static_cast<int>(tpath(hv, from, s.foot2).edges.size());
            return d1 <= d2 ? std::make_pair(s.foot1, s.rep1) : std::make_pair(s.foot2, s.rep2);
        };
        if (qs.size() == 2) {
            int i = pos(qs[0]), j = pos(qs[1]);
            if (i == 0 && j == 2) {
                commit_or_throw({qs[0]->rep1, qs[1]->rep1}, "fan3-deg-shared");
            } else {
                // One side is the second spoke; approach it avoiding its donor.
                const auto& sother = i == 1 ? *qs[1] : *qs[0];
                const auto& s2 = i == 1 ? *qs[0] : *qs[1];
                auto seg = avoid_into(sother.foot2, s2);
                seg.insert(seg.begin(), sother.rep2);
                commit_or_throw(seg, "fan3-deg-pair");
            }
        } else {
            const auto& s = *qs[0];
            VertexId p0 = port_for_other(hv, s.h_edge);
            int i = pos(qs[0]);
            if (i == 1) {
                commit_or_throw(avoid_into(p0, s), "fan3-deg-port");
            } else {
                auto [ft, rep] = nearer_foot(p0, s);
                std::vector<EdgeId> seg{rep};
                if (ft != p0) {
                    auto p = tpath(hv, ft, p0);
                    seg.insert(seg.end(), p.edges.begin(), p.edges.end());
                }
                commit_or_throw(seg, "fan3-deg-port");
            }
        }
    }

    void on_hub(const RuleEvent& ev) {
        int u = ev.target;
        for (size_t i = 0; i < ev.spokes.size(); ++i) {
            const auto& s = ev.spokes[i];
            if (!q_edge[static_cast<size_t>(s.h_edge)] || !s.colored_here) continue;
            EdgeId other = other_q_edge(u, s.h_edge);
            bool outgoing = i + 1 == ev.spokes.size();
            EdgeId preferred;
            if (outgoing) {
                bool via_first = other >= 0 && other == ev.spokes[0].h_edge &&
                                 !is_two(ev.spokes[0].h_edge);
                preferred = via_first ? s.rep2 : s.rep1;
            } else if (i == 0) {
                bool next_is_other = ev.spokes.size() > 2 && other == ev.spokes[1].h_edge;
                preferred = next_is_other ? s.rep1 : s.rep2;
            } else {
                preferred = s.rep1;
            }
            EdgeId alt = preferred == s.rep1 ? s.rep2 : s.rep1;
            if (!try_commit({preferred}) && !try_commit({alt}))
                throw LemmaViolation("hub-rep", "no usable representative at hub " +
                                                    std::to_string(u));
        }
    }

    void on_solo(const RuleEvent& ev) {
        if (!q_edge[static_cast<size_t>(ev.h_edge)] || resolved.count(ev.target)) return;
        int hv = ev.target;
        const auto& s = ev.spokes[0];
        VertexId p0 = port_for_other(hv, ev.h_edge);
        auto p = path_avoiding_edge(g, c.tree_vertices[static_cast<size_t>(hv)], p0, s.foot1,
                                    s.foot2, ev.donors[0]);
        EdgeId rep = p.vertices.back() == s.foot1 ? s.rep1 : s.rep2;
        commit_or_throw(with_path(rep, p), "solo-path");
        resolved.insert(hv);
    }

    void on_twin(const RuleEvent& ev) {
        int hv = ev.target;
        if (resolved.count(hv)) return;
        auto qs = q_spokes(ev);
        if (qs.empty()) return;
        if (qs.size() == 1 && !qs[0]->colored_here) return;  // placed by its own event
        struct Option {
            VertexId foot;
            EdgeId rep;  // -1 when the representative is already on the path
        };
        auto options = [&](const RuleEvent::Spoke& s) {
            std::vector<Option> out;
            if (!s.colored_here) {
                if (present[static_cast<size_t>(s.rep1)])
                    out.push_back({s.foot1, -1});
                else if (present[static_cast<size_t>(s.rep2)])
                    out.push_back({s.foot2, -1});
                else
                    throw InvariantViolation("stale twin side not placed");
            } else {
                out.push_back({s.foot1, s.rep1});
                out.push_back({s.foot2, s.rep2});
            }
            return out;
        };
        std::vector<Option> left, right;
        if (qs.size() == 2) {
            left = options(*qs[0]);
            right = options(*qs[1]);
        } else {
            left = options(*qs[0]);
            right = {{port_for_other(hv, qs[0]->h_edge), -1}};
        }
        for (const auto& lo : left)
            for (const auto& ro : right) {
                std::vector<EdgeId> seg;
                if (lo.rep >= 0) seg.push_back(lo.rep);
                if (lo.foot != ro.foot) {
                    auto p = tpath(hv, lo.foot, ro.foot);
                    seg.insert(seg.end(), p.edges.begin(), p.edges.end());
                }
                if (ro.rep >= 0) seg.push_back(ro.rep);
                if (try_commit(seg)) {
                    resolved.insert(hv);
                    return;
                }
            }
        throw LemmaViolation("twin-port-combo", "no valid connection through tree " +
                                                    std::to_string(hv));
    }

    void on_tiny_hub(const RuleEvent& ev) {
        int hv = ev.target;
        if (resolved.count(hv)) return;
        auto qs = q_spokes(ev);
        if (qs.empty()) return;
        if (qs.size() == 2) {
            VertexId meet = ev.u;
            for (const auto* s : qs)
                if (!s->colored_here) {
                    if (present[static_cast<size_t>(s->rep1)])
                        meet = s->foot1;
                    else if (present[static_cast<size_t>(s->rep2)])
                        meet = s->foot2;
                    else
                        throw InvariantViolation("stale tiny-hub side not placed");
                }
            std::vector<EdgeId> seg;
            for (const auto* s : qs) {
                if (!s->colored_here) continue;
                EdgeId rep = spoke_rep_at(*s, meet);
                if (rep < 0)
                    throw LemmaViolation("tiny-hub-port", "no representative lands on the meet");
                seg.push_back(rep);
            }
            commit_or_throw(seg, "tiny-hub-path");
        } else {
            const auto& s = *qs[0];
            if (!s.colored_here) return;  // placed by its own event
            VertexId p0 = port_for_other(hv, s.h_edge);
            EdgeId rep = spoke_rep_at(s, p0);
            if (rep < 0)
                throw LemmaViolation("tiny-hub-port", "port outside the tree edge");
            commit_or_throw({rep}, "tiny-hub-path");
        }
        resolved.insert(hv);
    }

    void on_last(const RuleEvent& ev) {
        if (!q_edge[static_cast<size_t>(ev.h_edge)] || resolved.count(ev.target)) return;
        int hv = ev.target;
        const auto& s = ev.spokes[0];
        VertexId p0 = port_for_other(hv, ev.h_edge);
        EdgeId rep = spoke_rep_at(s, p0);
        if (rep < 0) throw LemmaViolation("last-port", "port is not a foot of the edge");
        commit_or_throw({rep}, "last-path");
        resolved.insert(hv);
    }

    void on_chain(const RuleEvent& ev) {
        int hv = ev.target;
        if (resolved.count(hv)) return;
        auto qs = q_spokes(ev);
        if (qs.empty()) return;
        if (qs.size() == 2) {
            if (ev.shortcut >= 0) {
                commit_or_throw({ev.shortcut}, "chain-shortcut");
            } else {
                commit_or_throw({qs[0]->rep1, qs[1]->rep1}, "chain-meet");
            }
        } else {
            const auto& s = *qs[0];
            VertexId p0 = ha == hv ? a : b;
            EdgeId rep = spoke_rep_at(s, p0);
            if (rep < 0) throw LemmaViolation("chain-port", "endpoint off the tree edge");
            commit_or_throw({rep}, "chain-port");
        }
        resolved.insert(hv);
    }

    void dispatch(const RuleEvent& ev) {
        switch (ev.rule) {
            case Rule::one_edge: on_one_edge(ev); break;
            case Rule::fan_rotate: on_fan_rotate(ev); break;
            case Rule::fan_three: on_fan_three(ev); break;
            case Rule::hub: on_hub(ev); break;
            case Rule::solo_two_edge: on_solo(ev); break;
            case Rule::twin_foot_paths: on_twin(ev); break;
            case Rule::tiny_tree_hub: on_tiny_hub(ev); break;
            case Rule::last_uncolored: on_last(ev); break;
            case Rule::chain_two_edge:
            case Rule::chain_final:
            case Rule::chain_root: on_chain(ev); break;
            default: break;
        }
    }

    std::vector<EdgeId> build() {
        for (const auto& ev : run.events) {
            dispatch(ev);
            maintenance();
        }
        for (int hv : q_vertices)
            if (c.is_tree_vertex(hv) && !resolved.count(hv))
                throw InvariantViolation("tree " + std::to_string(hv) + " left unresolved");
        return members;
    }
};

WitnessPath assemble(const Graph& g, const std::vector<EdgeId>& members, VertexId a, VertexId b,
                     const RainbowColoring& col) {
    WitnessPath out;
    out.vertices.push_back(a);
    if (members.empty()) {
        if (a != b) throw InvariantViolation("empty witness between distinct vertices");
        return out;
    }
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId e : members) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    if (at[a].size() != 1 || at[b].size() != 1)
        throw InvariantViolation("witness endpoints are not degree one");
    for (const auto& [v, es] : at)
        if (v != a && v != b && es.size() != 2)
            throw InvariantViolation("witness interior vertex degree is not two");
    std::set<EdgeId> left(members.begin(), members.end());
    VertexId cur = a;
    while (cur != b || !left.empty()) {
        EdgeId next = -1;
        for (EdgeId e : at[cur])
            if (left.count(e)) next = e;
        if (next < 0) throw InvariantViolation("witness disconnected");
        left.erase(next);
        cur = g.other_end(next, cur);
        out.vertices.push_back(cur);
        out.edges.push_back(next);
        out.colors.push_back(col.color(next));
    }
    if (cur != b) throw InvariantViolation("witness does not end at the target");
    return out;
}

}  // namespace

Take3Run color_take3(const Graph& g, const InducedForest& forest, const Contraction& c,
                     const Skeleton& sk, Take3Options opts) {
    Engine eng(g, forest, c, sk, opts);
    return eng.run();
}

WitnessPath take3_witness(const Graph& g, const Contraction& c, const Skeleton& sk,
                          const Take3Run& run, VertexId src, VertexId dst) {
    if (src < 0 || src >= g.vertex_count() || dst < 0 || dst >= g.vertex_count())
        throw InvalidParams("witness endpoints out of range");
    const RainbowColoring& col = run.coloring;
    WitnessPath out;
    out.vertices.push_back(src);
    if (src == dst) return out;

    int hs = c.h_of_vertex[static_cast<size_t>(src)];
    int hd = c.h_of_vertex[static_cast<size_t>(dst)];
    VertexId a = src, b = dst;
    EdgeId pre = -1, post = -1;
    if (hs >= 0 && !c.is_tree_vertex(hs) && sk.in_leaf_s[static_cast<size_t>(hs)]) {
        pre = c.h_edges[static_cast<size_t>(sk.parent_edge[static_cast<size_t>(hs)])].rep1;
        a = g.other_end(pre, src);
    }
    if (hd >= 0 && !c.is_tree_vertex(hd) && sk.in_leaf_s[static_cast<size_t>(hd)]) {
        post = c.h_edges[static_cast<size_t>(sk.parent_edge[static_cast<size_t>(hd)])].rep2;
        b = g.other_end(post, dst);
    }

    std::vector<EdgeId> core;
    int ha = c.h_of_vertex[static_cast<size_t>(a)];
    int hb = c.h_of_vertex[static_cast<size_t>(b)];
    if (a == b) {
        // nothing between the two attachment points
    } else if (ha == hb) {
        if (!c.is_tree_vertex(ha))
            throw InvariantViolation("distinct vertices contracted to one non-tree vertex");
        core = tree_path(g, c.tree_vertices[static_cast<size_t>(ha)], a, b).edges;
    } else {
        Replay rp(g, c, sk, run, a, b);
        core = rp.build();
    }

    std::vector<EdgeId> all;
    if (pre >= 0) all.push_back(pre);
    all.insert(all.end(), core.begin(), core.end());
    if (post >= 0) all.push_back(post);
    std::set<int> colors;
    for (EdgeId e : all)
        if (!colors.insert(col.color(e)).second)
            throw InvariantViolation("witness color repeated");
    return assemble(g, all, src, dst, col);
}

}  // namespace rainbow
