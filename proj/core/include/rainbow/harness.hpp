#ifndef RAINBOW_HARNESS_HPP
#define RAINBOW_HARNESS_HPP

#include <optional>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/contraction.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/skeleton.hpp"
#include "rainbow/take1.hpp"
#include "rainbow/take3.hpp"

namespace rainbow {

enum class Method { take1, take2, take3 };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct HarnessOptions {
    Method method = Method::take3;
    ForestSolverCaps caps{};
    LexSearchOptions lex{};
    bool check_invariants = true;
    /// take3 retreats to take2 on a LemmaViolation or a solver cap; with the
    /// retreat disabled those exceptions propagate to the caller.
    bool allow_fallback = true;
};

/// A finished construction: the coloring plus the state needed for witness
/// queries. `used` may differ from `requested` after a take3 retreat;
/// fallback_reason then holds the failed check id or "instance-too-large".
struct Construction {
    Graph graph;
    Method requested = Method::take3;
    Method used = Method::take3;
    bool fell_back = false;
    std::string fallback_reason;
    InducedForest forest;
    RainbowColoring coloring;
    int bound = 0;  // guaranteed palette bound of the method that ran

    std::optional<DominatingConnector> connector;  // take1
    std::optional<Contraction> contraction;        // take2 / take3
    std::optional<Skeleton> skeleton;
    std::optional<Take3Run> take3;

    /// Construction-guided rainbow path; take2 and take3 only.
    WitnessPath witness(VertexId src, VertexId dst) const;
};

Construction build_construction(const Graph& g, HarnessOptions opts = {});

struct ExperimentRecord {
    std::string label;
    int n = 0;
    int m = 0;
    int diameter = 0;
    int f = 0;
    int trees = 0;
    std::string requested;
    std::string used;
    std::string fallback_reason;
    bool fell_back = false;
    int colors = 0;  // palette size of the produced coloring
    int bound = 0;
    bool verify_ran = false;
    bool verified = false;
    bool timings = false;  // controls whether the time columns are emitted
    double build_ms = 0;
    double verify_ms = 0;
};

ExperimentRecord run_experiment(const Graph& g, const std::string& label, HarnessOptions opts = {},
                                bool with_verify = true, bool with_timings = false);

std::string record_csv_header(bool timings);
std::string record_to_csv(const ExperimentRecord& r);
std::string record_to_text(const ExperimentRecord& r);
std::string record_to_json(const ExperimentRecord& r);

}  // namespace rainbow

#endif
