#include <random>

#include <benchmark/benchmark.h>

#include "nmeasure/networks/mlp.hpp"

using namespace nmeasure;

namespace {

MLPArchitecture arch_for(benchmark::State& state, std::size_t input_dim) {
    MLPArchitecture a;
    a.input_dim = input_dim;
    a.hidden_layers = static_cast<std::size_t>(state.range(0));
    a.hidden_width = static_cast<std::size_t>(state.range(1));
    return a;
}

Eigen::MatrixXd random_inputs(Eigen::Index rows, Eigen::Index cols) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1, 1);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
    return m;
}

// (x, t, xi1, xi2) inputs with every PDE channel, as in a residual pass.
void BM_MlpForwardBatch(benchmark::State& state) {
    const Mlp net = Mlp::xavier(arch_for(state, 4), 1);
    const auto n = static_cast<Eigen::Index>(state.range(2));
    const Eigen::MatrixXd in = random_inputs(4, n);
    const InputRoles roles{1, 0};
    for (auto _ : state) {
        auto out = net.forward_batch(in, roles, Channels::pde_1d());
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_MlpForwardBatch)->Args({6, 20, 1024})->Args({6, 40, 1024})->Args({5, 32, 4096});

void BM_MlpForwardBackward(benchmark::State& state) {
    const Mlp net = Mlp::xavier(arch_for(state, 4), 1);
    const auto n = static_cast<Eigen::Index>(state.range(2));
    const Eigen::MatrixXd in = random_inputs(4, n);
    const InputRoles roles{1, 0};
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.architecture().parameter_count()));
    for (auto _ : state) {
        MlpTape tape;
        const Eigen::MatrixXd out = net.forward_batch(in, roles, Channels::pde_1d(), &tape);
        net.backward(tape, out, grad);
        benchmark::DoNotOptimize(grad.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_MlpForwardBackward)->Args({6, 20, 1024})->Args({6, 40, 1024})->Args({5, 32, 4096});

void BM_MlpPointDerivatives(benchmark::State& state) {
    const Mlp net = Mlp::xavier(arch_for(state, 4), 1);
    const double in[4] = {0.3, 0.2, -0.1, 0.5};
    for (auto _ : state) {
        auto e = net.forward_with_input_derivatives(in, InputRoles{1, 0}, Channels::pde_1d());
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_MlpPointDerivatives)->Args({6, 20, 1})->Args({6, 40, 1});

}  // namespace
