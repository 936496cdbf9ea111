#include <benchmark/benchmark.h>

#include <maskit/maskit.hpp>

using namespace maskit;

static void BM_TracePoly(benchmark::State& state) {
    // Alternating commutators give words of length 4k with degree growing in k.
    std::string w;
    for (int i = 0; i < state.range(0); ++i) w += i % 2 ? "bTBt" : "aTAt";
    const GroupWord g = parse_word(w);
    for (auto _ : state) benchmark::DoNotOptimize(trace_poly(g));
    state.SetLabel(std::to_string(g.size()) + " letters");
}
BENCHMARK(BM_TracePoly)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_Enumerate(benchmark::State& state) {
    // enumerate_curves caches per depth; time the first call only.
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(depth));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Iterations(1)->Unit(benchmark::kMillisecond);

static void BM_TraceRay(benchmark::State& state) {
    const char* words[] = {"t", "aBT", "tat"};
    const GroupWord g = parse_word(words[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(trace_ray(g, 0.1, 100, 0));
    state.SetLabel(g.str());
}
BENCHMARK(BM_TraceRay)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_LimitPoints(benchmark::State& state) {
    const ParameterPoint p{{0, 2}, {0, 2}};
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(limit_points(p, depth));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(reduced_word_count(depth) + 1));
}
BENCHMARK(BM_LimitPoints)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
