// Per-stage costs of the coloring pipeline on random connected graphs.

#include <benchmark/benchmark.h>

#include "rainbow/contraction.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/skeleton.hpp"
#include "rainbow/take3.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

Graph instance(int n) { return erdos_renyi_connected(n, 0.35, 8800 + static_cast<std::uint64_t>(n)); }

void bm_max_induced_forest(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_induced_forest(g));
}

void bm_min_components_forest(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_induced_forest_min_components(g));
}

void bm_heuristic_forest(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(heuristic_induced_forest(g));
}

void bm_contract_and_skeleton(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    auto forest = max_induced_forest_min_components(g);
    for (auto _ : state) {
        auto c = contract_forest(g, forest.vertices);
        benchmark::DoNotOptimize(build_skeleton_take3(c));
    }
}

void bm_color(benchmark::State& state, Method m) {
    auto g = instance(static_cast<int>(state.range(0)));
    HarnessOptions opts;
    opts.method = m;
    opts.check_invariants = false;
    for (auto _ : state) benchmark::DoNotOptimize(build_construction(g, opts));
}

void bm_take1(benchmark::State& state) { bm_color(state, Method::take1); }
void bm_take2(benchmark::State& state) { bm_color(state, Method::take2); }
void bm_take3(benchmark::State& state) { bm_color(state, Method::take3); }

void bm_verify(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    auto con = build_construction(g);
    for (auto _ : state) benchmark::DoNotOptimize(verify_rainbow(g, con.coloring));
}

void bm_witness_all_pairs(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    auto con = build_construction(g);
    for (auto _ : state)
        for (VertexId a = 0; a < g.vertex_count(); ++a)
            for (VertexId b = 0; b < g.vertex_count(); ++b)
                if (a != b) benchmark::DoNotOptimize(con.witness(a, b));
}

void bm_rc_exact(benchmark::State& state) {
    auto g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rc_exact(g));
}

}  // namespace

BENCHMARK(bm_max_induced_forest)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_min_components_forest)->Arg(12)->Arg(16);
BENCHMARK(bm_heuristic_forest)->Arg(12)->Arg(20)->Arg(40);
BENCHMARK(bm_contract_and_skeleton)->Arg(12)->Arg(16);
BENCHMARK(bm_take1)->Arg(12)->Arg(16);
BENCHMARK(bm_take2)->Arg(12)->Arg(16);
BENCHMARK(bm_take3)->Arg(12)->Arg(16);
BENCHMARK(bm_verify)->Arg(12)->Arg(16);
BENCHMARK(bm_witness_all_pairs)->Arg(12);
BENCHMARK(bm_rc_exact)->Arg(6);

BENCHMARK_MAIN();
