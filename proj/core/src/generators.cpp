#include "rainbow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const char* what) {
    if (!ok) throw InvalidParams(what);
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path_graph needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph needs n >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete_graph needs n >= 1");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "complete_multipartite needs at least one part");
    for (int p : parts) require(p >= 1, "complete_multipartite parts must be positive");
    std::vector<int> block;
    for (size_t i = 0; i < parts.size(); ++i)
        block.insert(block.end(), static_cast<size_t>(parts[i]), static_cast<int>(i));
    int n = static_cast<int>(block.size());
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (block[static_cast<size_t>(i)] != block[static_cast<size_t>(j)]) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph wheel_graph(int rim) {
    require(rim >= 3, "wheel_graph needs rim >= 3");
    EdgeList e;
    for (int i = 1; i <= rim; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i == rim ? 1 : i + 1);
    }
    return Graph::from_edges(rim + 1, e);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree needs n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(static_cast<size_t>(n - 2));
    for (int& x : prufer) x = pick(rng);
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int x : prufer) ++degree[static_cast<size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    EdgeList e;
    for (int x : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, x);
        if (--degree[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    e.emplace_back(a, b);
    return Graph::from_edges(n, e);
}

Graph complete_with_pendants(int k, int pendants_per_vertex) {
    require(k >= 1, "complete_with_pendants needs k >= 1");
    require(pendants_per_vertex >= 0, "pendants_per_vertex must be >= 0");
    EdgeList e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < pendants_per_vertex; ++p) e.emplace_back(i, next++);
    return Graph::from_edges(next, e);
}

Graph erdos_renyi_connected(int n, double p, std::uint64_t seed, int attempts) {
    require(n >= 1, "erdos_renyi_connected needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    require(attempts >= 1, "attempts must be >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(p);
    std::set<std::pair<int, int>> last;
    for (int round = 0; round < attempts; ++round) {
        last.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (flip(rng)) last.emplace(i, j);
        Graph g = Graph::from_edges(n, EdgeList(last.begin(), last.end()));
        if (is_connected(g)) return g;
    }
    // Force connectivity: attach each vertex of a random order to a random
    // earlier vertex.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        int a = order[static_cast<size_t>(i)];
        int b = order[static_cast<size_t>(pick(rng))];
        last.emplace(std::min(a, b), std::max(a, b));
    }
    return Graph::from_edges(n, EdgeList(last.begin(), last.end()));
}

Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, e);
}

Graph chain_witness_graph() {
    return Graph::from_edges(8, {{0, 1},
                                 {2, 3},
                                 {4, 5},
                                 {0, 6},
                                 {1, 6},
                                 {2, 6},
                                 {3, 6},
                                 {0, 7},
                                 {1, 7},
                                 {4, 7},
                                 {5, 7}});
}

}  // namespace rainbow
