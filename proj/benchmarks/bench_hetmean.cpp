#include "hetmean/blocks.hpp"
#include "hetmean/changepoint.hpp"
#include "hetmean/dgp.hpp"
#include "hetmean/limit_params.hpp"
#include "hetmean/lrv.hpp"
#include "hetmean/mean_test.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<double> noise(std::size_t n) {
    return hetmean::generate_noise(hetmean::DGPSpec::normal(), n, 1);
}

void BM_Gini(benchmark::State& state) {
    const auto v = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetmean::gini_mean_difference(v));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gini)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_KappaTilde(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = noise(n);
    const auto sub = hetmean::make_subsampling_scheme(n, 0.4, 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetmean::kappa_tilde_x(x, sub));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KappaTilde)->RangeMultiplier(4)->Range(512, 1 << 18)->Complexity(benchmark::oN);

void BM_PsiHat(benchmark::State& state) {
    const auto b = static_cast<std::size_t>(state.range(0));
    std::vector<double> sigma(b);
    for (std::size_t j = 0; j < b; ++j) {
        sigma[j] = 0.5 + static_cast<double>(j) / static_cast<double>(b);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetmean::psi_hat_sq(sigma, 1000, 7));
    }
}
BENCHMARK(BM_PsiHat)->Arg(6)->Arg(10)->Arg(40);

void BM_Test(benchmark::State& state) {
    const auto x = noise(static_cast<std::size_t>(state.range(0)));
    hetmean::TestConfig cfg;
    cfg.variant = state.range(1) == 0 ? hetmean::TestVariant::full : hetmean::TestVariant::simplified;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetmean::test_mean_constancy(x, cfg));
    }
}
BENCHMARK(BM_Test)->ArgsProduct({{500, 2000, 20000}, {0, 1}})->ArgNames({"n", "simplified"});

void BM_Segment(benchmark::State& state) {
    auto x = noise(2000);
    for (std::size_t i = 1000; i < x.size(); ++i) {
        x[i] += 1.0;
    }
    const hetmean::TimeSeries series(x);
    hetmean::TestConfig cfg;
    cfg.psi_mc_reps = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetmean::segment_recursively(series, cfg));
    }
}
BENCHMARK(BM_Segment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
