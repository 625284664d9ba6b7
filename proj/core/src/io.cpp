#include "rainbow/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace rainbow {

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::none: return "none";
        case Rule::spanning_tree: return "spanning-tree";
        case Rule::dom_first: return "dom-first";
        case Rule::dom_second: return "dom-second";
        case Rule::forest: return "forest";
        case Rule::b1_two_edge: return "foot-path-donor";
        case Rule::b1_surplus: return "surplus";
        case Rule::global_leaf: return "global-leaf";
        case Rule::one_edge: return "one-edge";
        case Rule::fan_rotate: return "fan-rotate";
        case Rule::fan_three: return "fan-three";
        case Rule::hub: return "hub";
        case Rule::solo_two_edge: return "solo-two-edge";
        case Rule::twin_foot_paths: return "twin-foot-paths";
        case Rule::tiny_tree_hub: return "tiny-tree-hub";
        case Rule::last_uncolored: return "last-uncolored";
        case Rule::chain_two_edge: return "chain-two-edge";
        case Rule::chain_final: return "chain-final";
        case Rule::chain_root: return "chain-root";
        case Rule::filler: return "filler";
    }
    return "none";
}

namespace {

Rule rule_from_name(const std::string& s) {
    static const std::pair<const char*, Rule> table[] = {
        {"none", Rule::none},
        {"spanning-tree", Rule::spanning_tree},
        {"dom-first", Rule::dom_first},
        {"dom-second", Rule::dom_second},
        {"forest", Rule::forest},
        {"foot-path-donor", Rule::b1_two_edge},
        {"surplus", Rule::b1_surplus},
        {"global-leaf", Rule::global_leaf},
        {"one-edge", Rule::one_edge},
        {"fan-rotate", Rule::fan_rotate},
        {"fan-three", Rule::fan_three},
        {"hub", Rule::hub},
        {"solo-two-edge", Rule::solo_two_edge},
        {"twin-foot-paths", Rule::twin_foot_paths},
        {"tiny-tree-hub", Rule::tiny_tree_hub},
        {"last-uncolored", Rule::last_uncolored},
        {"chain-two-edge", Rule::chain_two_edge},
        {"chain-final", Rule::chain_final},
        {"chain-root", Rule::chain_root},
        {"filler", Rule::filler},
    };
    for (auto& [name, r] : table)
        if (s == name) return r;
    return Rule::none;
}

}  // namespace

int RainbowColoring::colors_used() const {
    std::vector<char> seen(static_cast<size_t>(palette_size) + 1, 0);
    int count = 0;
    for (int c : assignment)
        if (c >= 1 && c <= palette_size && !seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = 1;
            ++count;
        }
    return count;
}

Graph read_edge_list(std::istream& in, bool dimacs) {
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        if (dimacs && line[pos] == 'c') continue;
        std::istringstream ls(line.substr(pos));
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate header at line " + std::to_string(lineno));
            if (dimacs) {
                std::string kind;
                ls >> kind;
                if (kind != "edge") throw ParseError("expected 'p edge' header");
            }
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("bad header at line " + std::to_string(lineno));
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before header at line " + std::to_string(lineno));
            int a, b;
            if (!(ls >> a >> b)) throw ParseError("bad edge at line " + std::to_string(lineno));
            if (dimacs) {
                --a;
                --b;
            }
            edges.push_back({a, b});
        } else {
            throw ParseError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw ParseError("missing 'p' header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path, bool dimacs) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in, dimacs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json must be {\"n\":.., \"edges\":[[u,v],..]}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("bad edge entry in graph json");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph::from_edges(j["n"].get<int>(), edges);
}

std::string coloring_to_json(const Graph& g, const RainbowColoring& c) {
    nlohmann::json j;
    j["palette"] = c.palette_size;
    auto edges = nlohmann::json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        nlohmann::json je;
        je["u"] = g.edge(e).u;
        je["v"] = g.edge(e).v;
        je["color"] = c.assignment[static_cast<size_t>(e)];
        je["rule"] = rule_name(e < static_cast<EdgeId>(c.provenance.size())
                                   ? c.provenance[static_cast<size_t>(e)]
                                   : Rule::none);
        edges.push_back(je);
    }
    j["edges"] = edges;
    if (!c.shortcut_edges.empty()) {
        auto sc = nlohmann::json::array();
        for (EdgeId e : c.shortcut_edges) sc.push_back({g.edge(e).u, g.edge(e).v});
        j["shortcut_edges"] = sc;
    }
    return j.dump(2);
}

RainbowColoring coloring_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("palette") || !j.contains("edges"))
        throw ParseError("coloring json must be {\"palette\":.., \"edges\":[..]}");
    RainbowColoring c;
    c.palette_size = j["palette"].get<int>();
    c.assignment.assign(static_cast<size_t>(g.edge_count()), 0);
    c.relevant.assign(static_cast<size_t>(g.edge_count()), false);
    c.provenance.assign(static_cast<size_t>(g.edge_count()), Rule::none);
    std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
    for (const auto& je : j["edges"]) {
        int u = je.at("u").get<int>();
        int v = je.at("v").get<int>();
        auto id = g.edge_between(u, v);
        if (!id) throw ParseError("coloring mentions non-edge " + std::to_string(u) + "-" + std::to_string(v));
        if (seen[static_cast<size_t>(*id)]) throw ParseError("coloring repeats an edge");
        seen[static_cast<size_t>(*id)] = 1;
        c.assignment[static_cast<size_t>(*id)] = je.at("color").get<int>();
        if (je.contains("rule"))
            c.provenance[static_cast<size_t>(*id)] = rule_from_name(je["rule"].get<std::string>());
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!seen[static_cast<size_t>(e)])
            throw ParseError("coloring misses edge " + std::to_string(g.edge(e).u) + "-" +
                             std::to_string(g.edge(e).v));
    if (j.contains("shortcut_edges"))
        for (const auto& e : j["shortcut_edges"])
            c.shortcut_edges.push_back(g.edge_id(e[0].get<int>(), e[1].get<int>()));
    return c;
}

}  // namespace rainbow
