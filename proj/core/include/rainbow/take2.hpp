#ifndef RAINBOW_TAKE2_HPP
#define RAINBOW_TAKE2_HPP

#include "rainbow/coloring.hpp"
#include "rainbow/contraction.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/skeleton.hpp"

namespace rainbow {

/// Colors G with palette f + t + 2 (f forest vertices, t trees): forest edges
/// get distinct colors 1..f-t, each tree reserves two surplus colors, the two
/// final colors attach the non-tree leaves of B, and every edge of the inner
/// skeleton B1 inherits either a donated in-tree color or a surplus color.
/// Uncolored edges are filled with color 1.
/// Throws SkeletonInvariantViolated when the skeleton breaks its structural
/// facts, InvariantViolation when the pass leaves a B1 edge uncolored.
RainbowColoring color_take2(const Graph& g, const InducedForest& forest, const Contraction& c,
                            const Skeleton& sk);

/// Rainbow src..dst path realized by the construction: guided by the B1 path
/// between the images of src and dst, entering each tree through a
/// representative and leaving through the foot whose in-tree path avoids the
/// tree's donated edge. Endpoints hanging off B as non-tree leaves attach
/// through their globally colored representatives.
WitnessPath take2_witness(const Graph& g, const Contraction& c, const Skeleton& sk,
                          const RainbowColoring& col, VertexId src, VertexId dst);

}  // namespace rainbow

#endif
