#include "wfusion/fusion.hpp"
#include "wfusion/qchar.hpp"
#include "wfusion/sicoh.hpp"
#include "wfusion/walg.hpp"

#include <benchmark/benchmark.h>

using namespace wfusion;

static void BM_AffineFusionTable(benchmark::State& state)
{
    const int r = static_cast<int>(state.range(0));
    const long n = state.range(1);
    auto ws = rootdata::dominant_weights(r, n);
    for (auto _ : state)
        for (const auto& u : ws)
            for (const auto& v : ws)
                benchmark::DoNotOptimize(fusion::affine_fusion(u, v, n));
}
BENCHMARK(BM_AffineFusionTable)->Args({2, 6})->Args({3, 3})->Args({4, 2});

static void BM_VerlindeTable(benchmark::State& state)
{
    const int r = static_cast<int>(state.range(0));
    const long n = state.range(1);
    auto sm = fusion::smatrix_affine(r, n);
    for (auto _ : state)
        for (const auto& u : sm.basis)
            for (const auto& v : sm.basis)
                benchmark::DoNotOptimize(fusion::verlinde_fusion(sm, u, v));
}
BENCHMARK(BM_VerlindeTable)->Args({2, 6})->Args({3, 3});

static void BM_WFusionRing(benchmark::State& state)
{
    auto model = walg::make_model(walg::Family::PrincipalSuper, state.range(0),
                                  static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(walg::fusion_ring(model));
}
BENCHMARK(BM_WFusionRing)->Args({2, 3})->Args({3, 2});

static void BM_NumeratorSeries(benchmark::State& state)
{
    rootdata::AffineWeight vac{std::vector<long>(3, 0)};
    vac.labels[0] = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(qchar::fkw_numerator(vac, 2, 0, state.range(0)));
}
BENCHMARK(BM_NumeratorSeries)->Arg(8)->Arg(16);

static void BM_CohomologyBlock(benchmark::State& state)
{
    for (auto _ : state) {
        auto blk = sicoh::build_block(Rat(1), state.range(0));
        benchmark::DoNotOptimize(sicoh::block_cohomology(blk));
    }
}
BENCHMARK(BM_CohomologyBlock)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
