#include "theta/detect.hpp"
#include "theta/geometry.hpp"
#include "theta/lemmas.hpp"
#include "theta/reference.hpp"

#include <benchmark/benchmark.h>

using namespace theta;

namespace {

ThetaSpec spec_355() {
    const std::vector<int> l{3, 5, 5};
    return validate_spec(l);
}

void BM_Incidence(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_incidence_graph(q).graph().edge_count());
}
BENCHMARK(BM_Incidence)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_IncidenceReference(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::incidence_graph(q).edge_count());
}
BENCHMARK(BM_IncidenceReference)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

// free host: the whole search space is walked
void BM_DetectFree(benchmark::State& state) {
    const Graph g = build_incidence_graph(static_cast<std::uint32_t>(state.range(0))).graph();
    const ThetaSpec spec = spec_355();
    for (auto _ : state) benchmark::DoNotOptimize(detect_theta(g, spec).expansions);
}
BENCHMARK(BM_DetectFree)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DetectFreeReference(benchmark::State& state) {
    const Graph g = build_incidence_graph(static_cast<std::uint32_t>(state.range(0))).graph();
    const ThetaSpec spec = spec_355();
    for (auto _ : state) benchmark::DoNotOptimize(reference::detect_theta(g, spec, SearchMode::First).status);
}
BENCHMARK(BM_DetectFreeReference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_C8Exhaustive(benchmark::State& state) {
    const IncidenceGraph ig = build_incidence_graph(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_c8_exhaustive(ig).cycles_checked);
}
BENCHMARK(BM_C8Exhaustive)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Peel(benchmark::State& state) {
    const Graph g = build_incidence_graph(7).graph();
    for (auto _ : state) benchmark::DoNotOptimize(peel_to_min_degree(g, 7).graph.vertex_count());
}
BENCHMARK(BM_Peel)->Unit(benchmark::kMillisecond);

void BM_PeelReference(benchmark::State& state) {
    const Graph g = build_incidence_graph(7).graph();
    for (auto _ : state) benchmark::DoNotOptimize(reference::min_degree_core(g, 7).size());
}
BENCHMARK(BM_PeelReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
