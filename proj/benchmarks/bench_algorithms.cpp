#include "qk/qk.hpp"

#include <benchmark/benchmark.h>

using namespace qk;

namespace {

SplitDigraph sink_free_split(std::size_t n, bool one_way) {
    RandomSplitOptions o;
    o.seed = n;
    o.clique_size = n / 3 + 2;
    o.independent_size = n - o.clique_size;
    o.one_way = one_way;
    o.sink_free = true;
    return gen_random_split(o);
}

void BM_OneWay(benchmark::State& state) {
    const SplitDigraph sd = sink_free_split(static_cast<std::size_t>(state.range(0)), true);
    for (auto _ : state) benchmark::DoNotOptimize(one_way_qk(sd));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneWay)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_TwoThirds(benchmark::State& state) {
    const SplitDigraph sd = sink_free_split(static_cast<std::size_t>(state.range(0)), false);
    for (auto _ : state) benchmark::DoNotOptimize(two_thirds_qk(sd));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoThirds)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_PeelSinks(benchmark::State& state) {
    RandomSplitOptions o;
    o.seed = 3;
    o.clique_size = static_cast<std::size_t>(state.range(0)) / 3 + 1;
    o.independent_size = static_cast<std::size_t>(state.range(0)) - o.clique_size;
    o.p_independent_to_clique = 0.2;
    const SplitDigraph sd = gen_random_split(o);
    for (auto _ : state) benchmark::DoNotOptimize(peel_sinks_two_thirds(sd));
}
BENCHMARK(BM_PeelSinks)->RangeMultiplier(2)->Range(16, 256);

void BM_CompleteSplit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SplitDigraph sd = gen_random_complete_split(11, n / 2, n - n / 2, 0.2, true);
    for (auto _ : state) benchmark::DoNotOptimize(complete_split_min_qk(sd));
}
BENCHMARK(BM_CompleteSplit)->RangeMultiplier(2)->Range(16, 256);

void BM_RootedQk(benchmark::State& state) {
    const Digraph d = gen_random_digraph(5, static_cast<std::size_t>(state.range(0)), 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(quasi_kernel_cl(d));
}
BENCHMARK(BM_RootedQk)->RangeMultiplier(2)->Range(16, 1024);

void BM_ExactSplit(benchmark::State& state) {
    RandomSplitOptions o;
    o.seed = 8;
    o.clique_size = 4;
    o.independent_size = static_cast<std::size_t>(state.range(0));
    const SplitDigraph sd = gen_random_split(o);
    for (auto _ : state) benchmark::DoNotOptimize(min_quasi_kernel(sd));
}
BENCHMARK(BM_ExactSplit)->DenseRange(8, 20, 4);

void BM_FptByClique(benchmark::State& state) {
    RandomSplitOptions o;
    o.seed = 9;
    o.clique_size = static_cast<std::size_t>(state.range(0));
    o.independent_size = 40;
    const SplitDigraph sd = gen_random_split(o);
    for (auto _ : state) benchmark::DoNotOptimize(fpt_by_clique(sd, 6));
}
BENCHMARK(BM_FptByClique)->DenseRange(2, 5, 1);

void BM_FptByIndependent(benchmark::State& state) {
    RandomSplitOptions o;
    o.seed = 10;
    o.clique_size = 30;
    o.independent_size = static_cast<std::size_t>(state.range(0));
    const SplitDigraph sd = gen_random_split(o);
    for (auto _ : state) benchmark::DoNotOptimize(fpt_by_independent(sd, 4));
}
BENCHMARK(BM_FptByIndependent)->DenseRange(6, 14, 4);

void BM_Reduction(benchmark::State& state) {
    const Digraph source = gen_random_digraph(12, static_cast<std::size_t>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_dds_to_qk(source, 2));
}
BENCHMARK(BM_Reduction)->RangeMultiplier(2)->Range(4, 32);

} // namespace

BENCHMARK_MAIN();
