#include <benchmark/benchmark.h>

#include "solitaire/harness.hpp"

using namespace solitaire;

namespace {

harness::ExperimentConfig pool_config(Game game, std::vector<int> params, int challenges) {
    harness::ExperimentConfig c;
    c.game = game;
    c.params = std::move(params);
    c.algorithms = {"shuffled"};
    c.challenges = challenges;
    c.trial_stats = false;
    return c;
}

void BM_BoxOffSerial(benchmark::State& state) {
    const auto config = pool_config(Game::boxoff, {4, 6, 4}, 200);
    for (auto _ : state) benchmark::DoNotOptimize(harness::evaluate_pool_serial(config, "shuffled"));
}

void BM_BoxOffParallel(benchmark::State& state) {
    const auto config = pool_config(Game::boxoff, {4, 6, 4}, 200);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harness::evaluate_pool_parallel(config, "shuffled", workers));
}

void BM_FujisanSerial(benchmark::State& state) {
    auto config = pool_config(Game::fujisan, {}, 100);
    config.metrics.lengths = true;
    for (auto _ : state) benchmark::DoNotOptimize(harness::evaluate_pool_serial(config, "shuffled"));
}

void BM_FujisanParallel(benchmark::State& state) {
    auto config = pool_config(Game::fujisan, {}, 100);
    config.metrics.lengths = true;
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harness::evaluate_pool_parallel(config, "shuffled", workers));
}

}  // namespace

BENCHMARK(BM_BoxOffSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxOffParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FujisanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FujisanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
