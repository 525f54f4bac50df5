#include <benchmark/benchmark.h>

#include "updown/build.hpp"
#include "updown/cover.hpp"
#include "updown/identities.hpp"
#include "updown/operators.hpp"

using namespace updown;

namespace {

void BM_BuildYoung(benchmark::State& state) {
    const int levels = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto S = make_structure(Family::young, {}, levels);
        benchmark::DoNotOptimize(S);
    }
}
BENCHMARK(BM_BuildYoung)->Arg(5)->Arg(8);

void BM_BuildRootedTrees(benchmark::State& state) {
    const int levels = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto S = make_structure(Family::rooted_trees, {}, levels);
        benchmark::DoNotOptimize(S);
    }
}
BENCHMARK(BM_BuildRootedTrees)->Arg(5)->Arg(7);

void BM_UpPowerSweep(benchmark::State& state) {
    auto S = make_structure(Family::planar_trees, {}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto powers = up_powers_from_zero(S);
        benchmark::DoNotOptimize(powers);
    }
}
BENCHMARK(BM_UpPowerSweep)->Arg(5)->Arg(7);

void BM_Classify(benchmark::State& state) {
    auto S = make_structure(Family::kingman, {}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = commutator_classify(S);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Classify)->Arg(6)->Arg(8);

void BM_UniversalCover(benchmark::State& state) {
    auto S = make_structure(Family::compositions, {}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cov = universal_cover(S, S.max_level());
        benchmark::DoNotOptimize(cov);
    }
}
BENCHMARK(BM_UniversalCover)->Arg(4)->Arg(6);

void BM_ChainCount(benchmark::State& state) {
    auto S = make_structure(Family::young, {}, 6);
    ObjectKey top{Family::young, 6, "3+2+1"};
    for (auto _ : state) {
        auto n = chain_count(S, S.zero_hat(), top);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_ChainCount);

}  // namespace
