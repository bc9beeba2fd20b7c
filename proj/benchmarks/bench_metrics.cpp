#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nmeasure/metrics/statistics.hpp"
#include "nmeasure/metrics/wasserstein.hpp"

using namespace nmeasure;

namespace {

std::vector<double> normal_sample(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

void BM_Wasserstein1d(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = normal_sample(n, 1), b = normal_sample(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(empirical_wasserstein_1d(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Wasserstein1d)->RangeMultiplier(10)->Range(100, 1000000)->Complexity(benchmark::oNLogN);

void BM_Histogram(benchmark::State& state) {
    const auto a = normal_sample(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        auto h = histogram(a, 50);
        benchmark::DoNotOptimize(h.counts.data());
    }
}
BENCHMARK(BM_Histogram)->Arg(10000)->Arg(1000000);

}  // namespace
