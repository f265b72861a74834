#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <fps/fps.hpp>

namespace
{

fps::series random_nonunit(int order, fps::mode m, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<fps::coefficient> cs{fps::coefficient::zero(fps::mode::exact), fps::coefficient::one(fps::mode::exact)};
    for (int n = 2; n <= order; ++n) {
        cs.push_back(fps::coefficient::real(fps::rational(num(rng), den(rng)), fps::mode::exact));
    }
    return fps::series(std::move(cs)).to_mode(m);
}

void bm_cauchy_mul(benchmark::State &state, fps::mode m)
{
    const int n = static_cast<int>(state.range(0));
    const auto f = random_nonunit(n, m, 1).with_coefficient(0, fps::coefficient::one(m));
    const auto g = random_nonunit(n, m, 2).with_coefficient(0, fps::coefficient::one(m));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fps::cauchy_mul(f, g));
    }
    state.SetComplexityN(n);
}

void bm_compose_nonunit(benchmark::State &state, fps::mode m)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = random_nonunit(n, m, 3);
    const auto f = random_nonunit(n, m, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fps::compose_nonunit(g, f));
    }
    state.SetComplexityN(n);
}

void bm_reversion(benchmark::State &state, fps::mode m)
{
    const int n = static_cast<int>(state.range(0));
    const auto f = random_nonunit(n, m, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fps::reversion(f));
    }
    state.SetComplexityN(n);
}

} // namespace

BENCHMARK_CAPTURE(bm_cauchy_mul, exact, fps::mode::exact)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK_CAPTURE(bm_cauchy_mul, float, fps::mode::floating)->RangeMultiplier(2)->Range(8, 256)->Complexity();
BENCHMARK_CAPTURE(bm_compose_nonunit, exact, fps::mode::exact)->RangeMultiplier(2)->Range(4, 16);
BENCHMARK_CAPTURE(bm_compose_nonunit, float, fps::mode::floating)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(bm_reversion, exact, fps::mode::exact)->RangeMultiplier(2)->Range(4, 16);
BENCHMARK_CAPTURE(bm_reversion, float, fps::mode::floating)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
