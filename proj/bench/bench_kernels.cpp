// Serial reference against OpenMP kernels. Model size is the benchmark
// argument; every run draws the same model from a fixed seed.
#include <benchmark/benchmark.h>

#include "polyreach/bounded_sat.hpp"
#include "polyreach/evaluate.hpp"
#include "polyreach/parser.hpp"
#include "polyreach/random.hpp"

using namespace polyreach;

namespace {

PreorderModel big_model(std::size_t n) {
    Rng rng(42);
    ModelSampler s;
    s.min_worlds = s.max_worlds = n;
    s.edge_density = 4.0 / static_cast<double>(n);
    return random_model(rng, s);
}

WorldSet half(std::size_t n) {
    WorldSet a(n);
    for (std::size_t i = 0; i < n; i += 2) a.set(i);
    return a;
}

void BM_Box(benchmark::State& state, Execution exec) {
    auto m = big_model(static_cast<std::size_t>(state.range(0)));
    auto a = half(m.size());
    for (auto _ : state) benchmark::DoNotOptimize(box_kernel(m, a, exec));
}

void BM_ReachComponents(benchmark::State& state, Execution exec) {
    auto m = big_model(static_cast<std::size_t>(state.range(0)));
    auto a = half(m.size()).complement();
    auto b = half(m.size());
    for (auto _ : state) benchmark::DoNotOptimize(reach_components(m, a, b, exec));
}

void BM_ReachFixpoint(benchmark::State& state) {
    auto m = big_model(static_cast<std::size_t>(state.range(0)));
    auto a = half(m.size()).complement();
    auto b = half(m.size());
    for (auto _ : state) benchmark::DoNotOptimize(reach_fixpoint(m, a, b));
}

void BM_Evaluate(benchmark::State& state, Execution exec) {
    auto m = big_model(static_cast<std::size_t>(state.range(0)));
    auto f = parse_formula("[](p -> gamma(p | q, ~<>q)) & gamma(<>p, []q)");
    EvalOptions o;
    o.execution = exec;
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(m, f, o));
}

void BM_BoundedSat(benchmark::State& state, Execution exec) {
    SatOptions o;
    o.max_worlds = static_cast<std::size_t>(state.range(0));
    o.execution = exec;
    auto f = parse_formula("gamma(p,q) & ~<>p");
    for (auto _ : state) benchmark::DoNotOptimize(bounded_sat(f, o).models_checked);
}

} // namespace

BENCHMARK_CAPTURE(BM_Box, serial, Execution::Serial)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK_CAPTURE(BM_Box, parallel, Execution::Parallel)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK_CAPTURE(BM_ReachComponents, serial, Execution::Serial)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK_CAPTURE(BM_ReachComponents, parallel, Execution::Parallel)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_ReachFixpoint)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Evaluate, serial, Execution::Serial)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK_CAPTURE(BM_Evaluate, parallel, Execution::Parallel)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK_CAPTURE(BM_BoundedSat, serial, Execution::Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BoundedSat, parallel, Execution::Parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
