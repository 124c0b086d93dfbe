// Serial reference vs OpenMP kernels on the same configurations.

#include "achsat/gap.hpp"
#include "achsat/monte_carlo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace achsat;

MonteCarloConfig two_sat_config()
{
    MonteCarloConfig cfg;
    cfg.n = 20'000;
    cfg.k = 2;
    cfg.l = 2;
    cfg.rule = {"majority_positive", ""};
    cfg.ratios = {0.9, 1.0, 1.05, 1.1};
    cfg.trials = 32;
    cfg.master_seed = 1;
    return cfg;
}

MonteCarloConfig three_sat_config()
{
    MonteCarloConfig cfg;
    cfg.n = 60;
    cfg.k = 3;
    cfg.l = 5;
    cfg.rule = {"majority_positive", ""};
    cfg.ratios = {4.0, 4.6};
    cfg.trials = 32;
    cfg.master_seed = 1;
    cfg.decider = DeciderKind::dpll;
    return cfg;
}

void BM_two_sat_serial(benchmark::State& state)
{
    const auto cfg = two_sat_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_sat_fraction_serial(cfg));
}

void BM_two_sat_parallel(benchmark::State& state)
{
    const auto cfg = two_sat_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_sat_fraction_parallel(cfg, static_cast<int>(state.range(0))));
}

void BM_three_sat_serial(benchmark::State& state)
{
    const auto cfg = three_sat_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_sat_fraction_serial(cfg));
}

void BM_three_sat_parallel(benchmark::State& state)
{
    const auto cfg = three_sat_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_sat_fraction_parallel(cfg, static_cast<int>(state.range(0))));
}

void BM_gap_generation(benchmark::State& state)
{
    GapProblemSpec spec;
    spec.n = 50;
    const auto rules = adversary_library();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            generate_gap_trials(spec, rules, 4, 1, {kDefaultGapBudget, 0}, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_two_sat_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_two_sat_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_three_sat_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_three_sat_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_gap_generation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
