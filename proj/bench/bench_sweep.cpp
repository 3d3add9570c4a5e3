// Compares the three distance-to-code sweep kernels (serial analytic,
// OpenMP-parallel analytic, multi-source frontier) on torus codes of
// increasing size, plus the backtracking search at desk scale.

#include <benchmark/benchmark.h>

#include "qpc/constructions.hpp"
#include "qpc/metrics_kernels.hpp"
#include "qpc/search.hpp"

namespace {

// Tiled perfect-code instance: p=q=s gives 36*s^2 vertices, 6*s^2 codewords.
qpc::Code tiled(int s) { return qpc::build_n34_tile(s, s).code; }

void bench_sweep_serial(benchmark::State& state) {
    const qpc::Code code = tiled(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qpc::distance_sweep_serial(code.graph, code.codewords));
    state.SetItemsProcessed(state.iterations() * code.graph.vertex_count());
}

void bench_sweep_parallel(benchmark::State& state) {
    const qpc::Code code = tiled(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qpc::distance_sweep_parallel(code.graph, code.codewords));
    state.SetItemsProcessed(state.iterations() * code.graph.vertex_count());
}

void bench_sweep_frontier(benchmark::State& state) {
    const qpc::Code code = tiled(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qpc::distance_sweep_frontier(code.graph, code.codewords));
    state.SetItemsProcessed(state.iterations() * code.graph.vertex_count());
}

void bench_search_c4c6(benchmark::State& state) {
    qpc::SearchSpec spec(qpc::parse_graph_spec("C4xC6"));
    spec.kind = qpc::LabelKind::perfect;
    spec.e = 2;
    spec.size_min = 2;
    spec.size_max = 2;
    spec.exhaustive = true;
    for (auto _ : state) benchmark::DoNotOptimize(qpc::search_code(spec));
}

void bench_search_c4_cube(benchmark::State& state) {
    qpc::SearchSpec spec(qpc::parse_graph_spec("C4xC4xC4"));
    spec.kind = qpc::LabelKind::quasi_perfect;
    spec.e = 1;
    spec.size_min = 8;
    spec.size_max = 8;
    spec.exhaustive = true;
    spec.symmetry_break = true;
    for (auto _ : state) benchmark::DoNotOptimize(qpc::search_code(spec));
}

}  // namespace

BENCHMARK(bench_sweep_serial)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_sweep_parallel)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_sweep_frontier)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_search_c4c6)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_search_c4_cube)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
