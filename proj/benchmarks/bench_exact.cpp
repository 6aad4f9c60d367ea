#include <benchmark/benchmark.h>

#include "ktr/exact.hpp"
#include "ktr/generator.hpp"
#include "ktr/model.hpp"

namespace {

void BM_ClosedNeighborhoods(benchmark::State& state) {
    const auto n = static_cast<ktr::Label>(state.range(0));
    const ktr::ReliabilityInstance inst = ktr::generateInstance({n, 100, 3, 1});
    for (auto _ : state) benchmark::DoNotOptimize(ktr::closedNeighborhoods(inst));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ClosedNeighborhoods)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_Exact(benchmark::State& state) {
    const auto n = static_cast<ktr::Label>(state.range(0));
    const ktr::ReliabilityInstance inst = ktr::generateInstance({n, 100, 3, 1});
    const ktr::Neighborhoods closed = ktr::closedNeighborhoods(inst);
    for (auto _ : state) benchmark::DoNotOptimize(ktr::ktrExact(inst, closed).reliability);
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Exact)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_ExactByReach(benchmark::State& state) {
    const auto reach = static_cast<ktr::Label>(state.range(0));
    const ktr::ReliabilityInstance inst = ktr::generateInstance({100000, 100, reach, 1});
    for (auto _ : state) benchmark::DoNotOptimize(ktr::ktrExact(inst).reliability);
}
BENCHMARK(BM_ExactByReach)->Arg(1)->Arg(3)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
