#include <benchmark/benchmark.h>

#include "nmeasure/loss/collocation.hpp"
#include "nmeasure/loss/residual_loss.hpp"
#include "nmeasure/problems/problems.hpp"
#include "nmeasure/train/trainer.hpp"

using namespace nmeasure;

namespace {

const char* kProblems[] = {"bistable", "diffusion", "reaction_diffusion"};
const MeasureVariant kVariants[] = {MeasureVariant::fullnn, MeasureVariant::pce_nn, MeasureVariant::galerkin_nn};

// Loss plus gradient on the default batch of a problem, as one L-BFGS closure call.
void BM_LossAndGradient(benchmark::State& state) {
    const std::string name = kProblems[state.range(0)];
    TrainConfig c = default_train_config(name, kVariants[state.range(1)]);
    c.n_xi = static_cast<std::size_t>(state.range(2));
    const RandomProblem problem = make_problem(name);
    const auto measure = make_measure(c, problem);
    CollocationBatch batch = sample_collocation(problem, c.counts, c.strategy, 1);
    batch.set_parameters(problem.params, problem.params.sample(c.n_xi, 2));
    for (auto _ : state) {
        auto r = evaluate_loss(*measure, problem, batch, c.weights, true);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetLabel(name + "/" + to_string(c.variant));
}
BENCHMARK(BM_LossAndGradient)
    ->Args({0, 0, 100})
    ->Args({1, 0, 50})
    ->Args({1, 1, 50})
    ->Args({1, 2, 50})
    ->Args({2, 0, 10})
    ->Unit(benchmark::kMillisecond);

}  // namespace
