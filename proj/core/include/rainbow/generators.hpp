#ifndef RAINBOW_GENERATORS_HPP
#define RAINBOW_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
/// Hub vertex 0 joined to a cycle on 1..rim; rim >= 3.
Graph wheel_graph(int rim);
Graph random_tree(int n, std::uint64_t seed);
/// Clique on 0..k-1 with pendant vertices hanging off each clique vertex.
Graph complete_with_pendants(int k, int pendants_per_vertex = 1);
/// G(n, p) resampled until connected, at most `attempts` times; after that a
/// random spanning tree is merged into the last sample.
Graph erdos_renyi_connected(int n, double p, std::uint64_t seed, int attempts = 200);
Graph petersen_graph();
/// Three two-vertex trees bridged by two degree-4 outside vertices; the
/// smallest graph whose skeleton leaves the root tree with two open chains.
Graph chain_witness_graph();

}  // namespace rainbow

#endif
