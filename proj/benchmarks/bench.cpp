#include <benchmark/benchmark.h>

#include "ae/arith.hpp"
#include "ae/oracle.hpp"
#include "ae/strategies.hpp"

using namespace ae;

static void BM_StarDetection(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Board b(n);
    for (VertexId v = 1; v < n; v += 3) b.claim(make_edge(0, v), Player::Avoider);
    for (auto _ : state) benchmark::DoNotOptimize(contains_star(b, Player::Avoider, 3));
}
BENCHMARK(BM_StarDetection)->Arg(100)->Arg(400);

static void BM_MonotoneStarMatch(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        GameConfig config{n, arith::star_bias_cap(n, 3), RuleSet::Monotone,
                          TargetFamily::star(3), 0};
        auto a = make_strategy("min-dmax", Player::Avoider, config);
        auto e = make_strategy("monotone-star", Player::Enforcer, config);
        benchmark::DoNotOptimize(play_match(config, *a, *e));
    }
}
BENCHMARK(BM_MonotoneStarMatch)->Arg(100)->Arg(200);

static void BM_StrictStarMatch(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        GameConfig config{n, n, RuleSet::Strict, TargetFamily::star(3), 0};
        auto a = make_strategy("min-dmax", Player::Avoider, config);
        auto e = make_strategy("strict-star", Player::Enforcer, config);
        benchmark::DoNotOptimize(play_match(config, *a, *e));
    }
}
BENCHMARK(BM_StrictStarMatch)->Arg(100)->Arg(200);

static void BM_OracleSolveMonotoneN4(benchmark::State& state) {
    for (auto _ : state) {
        GameConfig config{4, static_cast<std::uint64_t>(state.range(0)), RuleSet::Monotone,
                          TargetFamily::star(2), 0};
        benchmark::DoNotOptimize(oracle::solve(config));
    }
}
BENCHMARK(BM_OracleSolveMonotoneN4)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
