#ifndef RAINBOW_VERIFY_HPP
#define RAINBOW_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct VerificationReport {
    bool rainbow_connected = false;
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
    int colors_used = 0;
    /// Filled when requested: one rainbow path per ordered pair (a < b).
    std::map<std::pair<VertexId, VertexId>, WitnessPath> paths;
};

struct VerifyOptions {
    bool collect_paths = false;
    /// Abort with InstanceTooLarge past this many (vertex, color-set) states per source.
    std::uint64_t state_budget = 4'000'000;
};

/// Exhaustive check that every vertex pair is joined by a path with pairwise
/// distinct edge colors. BFS over (vertex, used-color set) states with subset
/// domination pruning; palettes above 64 colors are rejected as too large.
VerificationReport verify_rainbow(const Graph& g, const RainbowColoring& c, VerifyOptions opts = {});

/// True when path is a simple u..v walk over existing edges with distinct colors.
bool check_witness(const Graph& g, const RainbowColoring& c, const WitnessPath& path);

struct RcExactOptions {
    /// Hard cap on edge count for the general search (structured instances that
    /// succeed at a small color count finish regardless).
    int max_edges = 12;
    /// Abort after this many complete colorings tested at one color count.
    std::uint64_t coloring_budget = 60'000'000;
    /// Restrict to colorings whose color first-occurrences appear in edge-id
    /// order (each class chooses its smallest-id edge as representative; any
    /// coloring is a color permutation of exactly one such canonical form).
    bool canonical = true;
};

/// Smallest palette size admitting a rainbow-connected coloring.
/// Iterates the palette size upward from the diameter lower bound.
int rc_exact(const Graph& g, RcExactOptions opts = {});

/// diameter(g): every rainbow coloring needs at least this many colors.
int rc_lower_bound(const Graph& g);

}  // namespace rainbow

#endif
