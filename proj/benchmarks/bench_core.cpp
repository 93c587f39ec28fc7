#include <benchmark/benchmark.h>

#include "homshift/classify.hpp"
#include "homshift/cover.hpp"
#include "homshift/folding.hpp"
#include "homshift/graph.hpp"
#include "homshift/sofic.hpp"
#include "homshift/walkgraph.hpp"

using namespace homshift;

static void BM_WalkGraphBuild(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::complete, 4);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        WalkLimits limits;
        limits.vertex_budget = 500000;
        benchmark::DoNotOptimize(build_walk_graph(g, n, limits));
    }
}
BENCHMARK(BM_WalkGraphBuild)->Arg(1)->Arg(2)->Arg(3);

static void BM_WalkGraphDiameter(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::complete, 4);
    WalkLimits limits;
    limits.vertex_budget = 500000;
    const WalkGraphN wg = build_walk_graph(g, static_cast<std::size_t>(state.range(0)), limits);
    for (auto _ : state) benchmark::DoNotOptimize(diameter(wg));
}
BENCHMARK(BM_WalkGraphDiameter)->Arg(1)->Arg(2);

static void BM_CoverFiniteness(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::barbell, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decide_cover_finiteness(g));
}
BENCHMARK(BM_CoverFiniteness)->Arg(4)->Arg(16)->Arg(64);

static void BM_BlockGluingAt(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::hard_square);
    for (auto _ : state)
        benchmark::DoNotOptimize(block_gluing_at(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BlockGluingAt)->Arg(1)->Arg(2)->Arg(3);

static void BM_StiffReduce(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::path, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(stiff_reduce(g));
}
BENCHMARK(BM_StiffReduce)->Arg(8)->Arg(32);

static void BM_Classify(benchmark::State& state) {
    const Graph g = fixture(FixtureFamily::complete, 4);
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
