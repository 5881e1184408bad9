#include <benchmark/benchmark.h>

#include "latsnake/graphs.hpp"
#include "latsnake/markov.hpp"
#include "latsnake/orders.hpp"
#include "latsnake/paths.hpp"

using namespace latsnake;

static void BM_Evaluate(benchmark::State& state) {
    Coeffs c;
    for (long i = 0; i < state.range(0); ++i) c.emplace_back(1 + i % 3);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c));
}
BENCHMARK(BM_Evaluate)->Range(8, 1024);

static void BM_EnumerateMatchings(benchmark::State& state) {
    const Graph g = build_graph(SnakeGraph::from_coeffs(make_coeffs({1, 2, 4, 2, 3})));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g).size());
}
BENCHMARK(BM_EnumerateMatchings);

static void BM_LagrangeOfPath(benchmark::State& state) {
    const LatticePath p = christoffel(static_cast<std::uint32_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(l_of_path(p));
}
BENCHMARK(BM_LagrangeOfPath)->Arg(11)->Arg(31)->Arg(101);

static void BM_RecordsD(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_records(8, 5, 60, 1).size());
}
BENCHMARK(BM_RecordsD)->Unit(benchmark::kMillisecond);

static void BM_MarkovScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(uniqueness_scan(state.range(0)).triples.size());
}
BENCHMARK(BM_MarkovScan)->Arg(1000)->Arg(1000000);
BENCHMARK_MAIN();
