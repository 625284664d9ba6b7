#ifndef RAINBOW_TAKE3_HPP
#define RAINBOW_TAKE3_HPP

#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/contraction.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/skeleton.hpp"

namespace rainbow {

struct Take3Options {
    /// Check the running invariants after every rule application (cheap at
    /// desk scale; disable only for benchmarks).
    bool check_invariants = true;
};

/// One rule firing, with every tie and relabeling pinned at coloring time so
/// witness replay never re-derives a decision.
struct RuleEvent {
    struct Spoke {
        EdgeId h_edge = -1;
        int other = -1;               // non-tree endpoint (H id); for hub
                                      // events the child or parent H id
        VertexId foot1 = -1;          // feet inside the rule's tree, after
        VertexId foot2 = -1;          // any relabeling (foot2 = -1 on 1-edges)
        EdgeId rep1 = -1;             // graph edge landing on foot1
        EdgeId rep2 = -1;             // graph edge landing on foot2
        bool colored_here = false;
    };

    Rule rule = Rule::none;
    int target = -1;                // H vertex the rule fired on
    EdgeId h_edge = -1;             // single-edge rules
    int case_id = 0;                // rule-specific case (root variant = 3)
    std::vector<Spoke> spokes;
    std::vector<EdgeId> donors;     // tree edges whose colors were reused
    std::vector<char> cut_side;     // by graph vertex: inside the cut side V1
    EdgeId shortcut = -1;           // non-representative edge recruited
    VertexId u = -1, v = -1;        // normalized single-edge-tree endpoints
};

struct Take3Run {
    RainbowColoring coloring;
    std::vector<RuleEvent> events;
    int forest_size = 0;
    int tree_count = 0;
};

/// The f+2 coloring: forest colors 1..f-t, one surplus color per tree
/// (f-t+1..f), two global colors f+1, f+2 for the non-tree leaves of B.
/// Twelve sequential rules complete the inner skeleton; every choice is
/// logged for witness replay. Throws SkeletonInvariantViolated (bad
/// skeleton), LemmaViolation (a structural precondition failed, e.g. on a
/// non-optimal forest; callers may fall back to the weaker construction) or
/// InvariantViolation (internal bug).
Take3Run color_take3(const Graph& g, const InducedForest& forest, const Contraction& c,
                     const Skeleton& sk, Take3Options opts = {});

/// Rainbow src..dst path: replays the event log, assembling the pair's edge
/// set exactly the way the rules direct, checking after every event that no
/// color repeats. Endpoints that are non-tree leaves of B attach over their
/// two globally colored representatives.
WitnessPath take3_witness(const Graph& g, const Contraction& c, const Skeleton& sk,
                          const Take3Run& run, VertexId src, VertexId dst);

}  // namespace rainbow

#endif
