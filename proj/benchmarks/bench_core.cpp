#include <benchmark/benchmark.h>

#include "gfb/analysis.hpp"
#include "gfb/census.hpp"
#include "gfb/tiling.hpp"

using namespace gfb;

static void BM_WalkA(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        walk(Algorithm::A, depth, [&](const Node&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_WalkA)->DenseRange(4, 6);

static void BM_WalkB(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        walk(Algorithm::B, depth, [&](const Node&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_WalkB)->Arg(12)->Arg(16);

static void BM_CensusA(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census(Algorithm::A, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CensusA)->Arg(4)->Arg(6);

static void BM_CensusB(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census(Algorithm::B, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CensusB)->Arg(12)->Arg(16);

static void BM_MomentFloat(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment(Algorithm::B, static_cast<int>(state.range(0)), 2.5, MomentMode::Float));
    }
}
BENCHMARK(BM_MomentFloat)->Arg(16)->Arg(20);

static void BM_MomentExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment(Algorithm::A, static_cast<int>(state.range(0)), 2, MomentMode::Exact));
    }
}
BENCHMARK(BM_MomentExact)->Arg(4)->Arg(5);

static void BM_Locate(benchmark::State& state) {
    const RationalPoint theta = RationalPoint::parse("37/97,11/89");
    for (auto _ : state) benchmark::DoNotOptimize(locate(Algorithm::A, theta, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Locate)->Arg(12)->Arg(40);

static void BM_DirichletA(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_L(Algorithm::A, 6.0, state.range(0)));
}
BENCHMARK(BM_DirichletA)->Arg(8);
BENCHMARK_MAIN();
