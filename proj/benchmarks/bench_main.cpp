#include <benchmark/benchmark.h>

#include <latzeta/arith.hpp>
#include <latzeta/boundary.hpp>
#include <latzeta/lattice.hpp>
#include <latzeta/special.hpp>
#include <latzeta/tauber.hpp>

namespace {

void BM_EnumerateBall(benchmark::State& state) {
    const int nu = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(latzeta::enumerate_ball(nu, 400));
}
BENCHMARK(BM_EnumerateBall)->Arg(2)->Arg(3)->Arg(4);

void BM_RCountTable(benchmark::State& state) {
    const int nu = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(latzeta::r_count_table(nu, 100000));
}
BENCHMARK(BM_RCountTable)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BesselK(benchmark::State& state) {
    const int ell = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(latzeta::bessel_K(ell, x));
        x = x < 40.0 ? x * 1.37 : 0.1;
    }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(3)->Arg(10);

void BM_Certificate(benchmark::State& state) {
    latzeta::CertifyOptions opt;
    opt.series_terms = 20000;
    for (auto _ : state) benchmark::DoNotOptimize(latzeta::certify_nonvanishing(8, 3, 5, 100, opt));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

void BM_PartialSumM(benchmark::State& state) {
    const auto X = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(latzeta::partial_sum_M(2, X, 1.0));
}
BENCHMARK(BM_PartialSumM)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
