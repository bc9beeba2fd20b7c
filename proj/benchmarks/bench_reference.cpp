#include <vector>

#include <benchmark/benchmark.h>

#include "nmeasure/problems/reference.hpp"

using namespace nmeasure;

namespace {

void BM_BistableTrajectory(benchmark::State& state) {
    std::vector<double> grid;
    for (int i = 0; i <= 32; ++i) grid.push_back(0.25 * i);
    for (auto _ : state) {
        auto u = solve_bistable_reference(1.7, 1.0, grid);
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_BistableTrajectory);

void BM_ReactionDiffusionSolve(benchmark::State& state) {
    const auto nx = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto f = solve_reaction_diffusion_reference(0.7, 3.5, 0.5, 2.0, nx, 2 * nx);
        benchmark::DoNotOptimize(f.values.data());
    }
}
BENCHMARK(BM_ReactionDiffusionSolve)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
