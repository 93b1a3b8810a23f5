#include <benchmark/benchmark.h>

#include "fracline/analytic.hpp"
#include "fracline/random_inputs.hpp"
#include "fracline/rl_ops.hpp"
#include "fracline/solver.hpp"
#include "fracline/transform.hpp"
#include "fracline/wellposedness.hpp"

using namespace fracline;

namespace {

SampledFunction make_input(std::size_t n) {
    return sample(AnalyticFunction::hermite_gaussian(4, 1.0), GridSpec(n, 16.0));
}

void BM_ForwardTransform(benchmark::State& state) {
    auto f = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_ApplyRl(benchmark::State& state) {
    auto f = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_rl(f, {0.7, Side::Left}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyRl)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

// quadratic in n: the direct convolution dominates everything else here
void BM_GlDerivative(benchmark::State& state) {
    auto f = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gl_derivative(f, 0.7, Side::Left));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GlDerivative)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_Solve(benchmark::State& state) {
    const OperatorCoefficients co{1.0, 0.0, 0.0, 1.0, 0.8};
    auto f = random_mixture(7).sample(GridSpec(static_cast<std::size_t>(state.range(0)), 16.0));
    for (auto _ : state) benchmark::DoNotOptimize(solve(co, f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Solve)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Classify(benchmark::State& state) {
    const OperatorCoefficients co{-0.5, 1.0, 0.1, 1.0, 0.5};  // case IV, needs a scan
    for (auto _ : state) benchmark::DoNotOptimize(classify(co));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
