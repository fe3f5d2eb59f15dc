// Serial vs. OpenMP window fan-out on a synthetic daily series.

#include <benchmark/benchmark.h>

#include "tda/pipeline.hpp"
#include "tda/synth.hpp"

namespace {

tda::TimeSeries series(int days) {
    tda::NoisySineParams p;
    p.sine.period = 20;
    p.sine.length = days;
    p.noise_sd = 0.2;
    p.seed = 1;
    return tda::synth_noisy_sine(p);
}

void bench_serial(benchmark::State& state) {
    const auto ts = series(static_cast<int>(state.range(0)));
    const tda::PipelineConfig cfg;
    for (auto _ : state) {
        auto result = tda::run_analysis_serial(ts, cfg);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) - cfg.embedding.window + 1));
}

void bench_parallel(benchmark::State& state) {
    const auto ts = series(static_cast<int>(state.range(0)));
    tda::PipelineConfig cfg;
    cfg.parallel = true;
    for (auto _ : state) {
        auto result = tda::run_analysis(ts, cfg);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) - cfg.embedding.window + 1));
}

} // namespace

BENCHMARK(bench_serial)->Arg(120)->Arg(365)->Arg(2192)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_parallel)->Arg(120)->Arg(365)->Arg(2192)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
