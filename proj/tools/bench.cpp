// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "pbias/commitment.hpp"
#include "pbias/fixtures.hpp"
#include "pbias/goal_reward.hpp"
#include "pbias/suites.hpp"

using namespace pbias;

namespace {

const std::vector<Rational> kBiases{Rational(3, 2), Rational(2), Rational(3)};

void BM_ExhaustiveChain(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto s = parallel ? suites::run_exhaustive(suites::Property::RewardChain, kBiases, 4, 3)
                          : suites::run_exhaustive_serial(suites::Property::RewardChain, kBiases, 4, 3);
        benchmark::DoNotOptimize(s.violations);
        state.counters["checks"] = static_cast<double>(s.checks);
    }
}
BENCHMARK(BM_ExhaustiveChain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveCostRatio(benchmark::State& state) {
    for (auto _ : state) {
        auto s = suites::run_exhaustive(suites::Property::SophisticatedCostRatio, kBiases, 4, 3);
        benchmark::DoNotOptimize(s.violations);
    }
}
BENCHMARK(BM_ExhaustiveCostRatio)->Unit(benchmark::kMillisecond);

void BM_FeasibleSet(benchmark::State& state) {
    Graph g = generate("counter-w0", {{"n", std::to_string(state.range(1))}}).graph;
    const Rational b(13, 8);
    for (auto _ : state) {
        auto set = state.range(0) ? feasible_reward_set(g, b) : feasible_reward_set_serial(g, b);
        benchmark::DoNotOptimize(set.intervals.size());
    }
}
BENCHMARK(BM_FeasibleSet)->Args({0, 6})->Args({1, 6})->Args({0, 8})->Args({1, 8})->Unit(benchmark::kMillisecond);

void BM_ZeroEdge(benchmark::State& state) {
    Graph g = generate("fan", {{"n", std::to_string(state.range(1))}}).graph;
    const Rational b(3, 2);
    for (auto _ : state) {
        auto r = state.range(0) ? best_zero_edge(g, b) : best_zero_edge_serial(g, b);
        benchmark::DoNotOptimize(r.reward_after);
    }
}
BENCHMARK(BM_ZeroEdge)->Args({0, 12})->Args({1, 12})->Unit(benchmark::kMillisecond);

void BM_MinReward(benchmark::State& state) {
    Graph g = generate("rtight", {{"m", std::to_string(state.range(0))}}).graph;
    for (auto _ : state) benchmark::DoNotOptimize(min_reward(g, Rational(2)));
}
BENCHMARK(BM_MinReward)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
