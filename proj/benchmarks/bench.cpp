// Microbenchmarks for the neighbor-bound algorithms, the incremental graph,
// and cell sampling. Pools are drawn from the same generator the Monte-Carlo
// driver uses so results reflect the distribution the statistics run on.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "flowvor/dominance_graph.hpp"
#include "flowvor/neighbor_bounds.hpp"
#include "flowvor/simulation.hpp"
#include "flowvor/voronoi_cell.hpp"

namespace {

using namespace flowvor;

std::vector<Point> make_pool(std::size_t n, std::uint64_t seed) {
    return generate_points(n, trial_seed(seed, 0), 1.0);
}

void BM_UpperBoundSimple(benchmark::State& state) {
    const auto pool = make_pool(static_cast<std::size_t>(state.range(0)), 17);
    const CandidateSet cs = CandidateSet::make({0.0, 0.0}, pool);
    for (auto _ : state) {
        benchmark::DoNotOptimize(upper_bound_simple(cs));
    }
}
BENCHMARK(BM_UpperBoundSimple)->Arg(10)->Arg(40)->Arg(160)->Arg(640);

void BM_UpperBoundSorted(benchmark::State& state) {
    const auto pool = make_pool(static_cast<std::size_t>(state.range(0)), 17);
    const CandidateSet cs = CandidateSet::make({0.0, 0.0}, pool);
    for (auto _ : state) {
        benchmark::DoNotOptimize(upper_bound_sorted(cs));
    }
}
BENCHMARK(BM_UpperBoundSorted)->Arg(10)->Arg(40)->Arg(160)->Arg(640);

void BM_GraphInsertErase(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto pool = make_pool(n + 1, 23);
    for (auto _ : state) {
        state.PauseTiming();
        DominanceGraph graph({0.0, 0.0}, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            graph.insert(pool[i]);
        }
        state.ResumeTiming();
        const int id = graph.insert(pool[n]);
        graph.erase(id);
        benchmark::DoNotOptimize(graph.neighbors());
    }
}
BENCHMARK(BM_GraphInsertErase)->Arg(16)->Arg(64)->Arg(256);

void BM_CellNaive(benchmark::State& state) {
    const auto pool = make_pool(static_cast<std::size_t>(state.range(0)), 31);
    const Rect box{{-1.2, -1.2}, {1.2, 1.2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_cell({0.0, 0.0}, pool, box, 256));
    }
}
BENCHMARK(BM_CellNaive)->Arg(8)->Arg(32);

void BM_CellPrefiltered(benchmark::State& state) {
    const auto pool = make_pool(static_cast<std::size_t>(state.range(0)), 31);
    const Rect box{{-1.2, -1.2}, {1.2, 1.2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_cell_prefiltered({0.0, 0.0}, pool, box, 256));
    }
}
BENCHMARK(BM_CellPrefiltered)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
