#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "networks/trig_kernel.hpp"
#include "nmeasure/core/error.hpp"
#include "nmeasure/networks/checkpoint.hpp"
#include "nmeasure/networks/mlp.hpp"
#include "test_support.hpp"

using namespace nmeasure;
using nmtest::TempDir;

namespace {

constexpr double kPi = std::numbers::pi;

MLPArchitecture arch(std::size_t in, std::size_t out, std::size_t layers, std::size_t width,
                     Activation act = Activation::snake) {
    MLPArchitecture a;
    a.input_dim = in;
    a.output_dim = out;
    a.hidden_layers = layers;
    a.hidden_width = width;
    a.activation = act;
    return a;
}

// Perturbed Xavier network so biases and frequencies are generic.
Mlp random_net(const MLPArchitecture& a, std::uint64_t seed) {
    Mlp net = Mlp::xavier(a, seed);
    std::mt19937_64 rng(seed + 1000);
    std::normal_distribution<double> n(0.0, 0.2);
    for (Eigen::Index i = 0; i < net.theta().size(); ++i) net.theta()[i] += n(rng);
    return net;
}

}  // namespace

TEST(Snake, Examples) {
    EXPECT_EQ(snake(0.0, 0.7), 0.0);
    EXPECT_EQ(snake(0.0, -3.0), 0.0);
    EXPECT_NEAR(snake(kPi, 1.0), kPi, 1e-15);
    EXPECT_NEAR(snake(kPi / 2, 1.0), kPi / 2 + 1.0, 1e-15);
}

TEST(Snake, ZeroFrequencyThrows) { EXPECT_THROW(snake(1.0, 0.0), InvalidArgument); }

TEST(Architecture, ParameterCount) {
    const auto a = arch(3, 1, 2, 4);
    // (3+1)*4 + (4+1)*4 + (4+1)*1 + 2 frequencies
    EXPECT_EQ(a.parameter_count(), 16u + 20u + 5u + 2u);
    EXPECT_EQ(arch(3, 1, 2, 4, Activation::tanh).parameter_count(), 41u);
    EXPECT_THROW(arch(3, 1, 0, 4).validate(), InvalidArgument);
    EXPECT_THROW(arch(3, 1, 1, 0).validate(), InvalidArgument);
    EXPECT_EQ(MLPArchitecture::from_header(a.header()), a);
}

TEST(Xavier, BiasesZeroFrequenciesOne) {
    const auto a = arch(3, 2, 3, 8);
    const auto theta = xavier_init(a, 5);
    ASSERT_EQ(static_cast<std::size_t>(theta.size()), a.parameter_count());
    const auto dims = a.layer_dims();
    std::size_t offset = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        offset += dims[k] * dims[k + 1];
        for (std::size_t j = 0; j < dims[k + 1]; ++j) EXPECT_EQ(theta[offset + j], 0.0);
        offset += dims[k + 1];
    }
    ASSERT_EQ(offset, a.frequency_offset());
    for (std::size_t k = 0; k < a.hidden_layers; ++k) EXPECT_EQ(theta[offset + k], 1.0);
}

TEST(Xavier, WeightVarianceMatchesFanSum) {
    const auto a = arch(256, 1, 1, 256);
    const auto theta = xavier_init(a, 9);
    const Eigen::VectorXd w = theta.head(256 * 256);
    const double mean = w.mean();
    const double var = (w.array() - mean).square().sum() / double(w.size() - 1);
    const double expected = 2.0 / 512.0;
    EXPECT_LT(std::abs(var - expected), 0.2 * expected);
}

TEST(Forward, ZeroParametersGiveZero) {
    const auto a = arch(3, 2, 2, 5);
    Mlp net(a, Eigen::VectorXd::Zero(a.parameter_count()));
    // Frequencies are zero here too; the clamp keeps them admissible.
    const double in[] = {0.3, -1.2, 4.0};
    EXPECT_EQ(net.forward(in), Eigen::VectorXd::Zero(2));
}

TEST(Forward, OneHiddenLayerByHand) {
    // 2 inputs, 2 hidden snake units, 1 output.
    const auto a = arch(2, 1, 1, 2);
    Eigen::VectorXd theta(a.parameter_count());
    // W1 column-major (2x2): [[0.5, -1], [2, 0.25]]
    theta << 0.5, 2.0, -1.0, 0.25,  // W1
        0.1, -0.3,                   // b1
        1.5, -0.7,                   // W2 (1x2)
        0.2,                         // b2
        0.8;                         // a
    Mlp net(a, theta);
    const double x0 = 0.4, x1 = -0.9, freq = 0.8;
    const double z0 = 0.5 * x0 - 1.0 * x1 + 0.1;
    const double z1 = 2.0 * x0 + 0.25 * x1 - 0.3;
    auto s = [&](double z) { return z + std::pow(std::sin(freq * z), 2) / freq; };
    const double expected = 1.5 * s(z0) - 0.7 * s(z1) + 0.2;
    const double in[] = {x0, x1};
    EXPECT_NEAR(net.forward(in)[0], expected, 1e-15);
    EXPECT_NEAR(forward(a, theta, in)[0], expected, 1e-15);
}

TEST(Forward, OutputLayerIsAffine) {
    // With the hidden layer fixed, output = W2 h + b2 as a plain matrix product.
    const auto a = arch(3, 4, 1, 5, Activation::tanh);
    Mlp net = random_net(a, 3);
    const auto& th = net.theta();
    Eigen::Map<const Eigen::MatrixXd> w1(th.data(), 5, 3);
    Eigen::Map<const Eigen::VectorXd> b1(th.data() + 15, 5);
    Eigen::Map<const Eigen::MatrixXd> w2(th.data() + 20, 4, 5);
    Eigen::Map<const Eigen::VectorXd> b2(th.data() + 40, 4);
    const Eigen::Vector3d x(0.2, -0.5, 1.1);
    const Eigen::VectorXd h = (w1 * x + b1).array().tanh().matrix();
    const Eigen::VectorXd expected = w2 * h + b2;
    const Eigen::VectorXd got = net.forward(std::span<const double>(x.data(), 3));
    EXPECT_LT((got - expected).norm(), 1e-14);
}

TEST(Forward, DimensionMismatchThrows) {
    Mlp net = Mlp::xavier(arch(3, 1, 1, 4), 1);
    const double in[] = {1.0, 2.0};
    EXPECT_THROW(net.forward(in), InvalidArgument);
    EXPECT_THROW(Mlp(arch(3, 1, 1, 4), Eigen::VectorXd::Zero(3)), InvalidArgument);
}

TEST(Derivatives, ConstantNetworkHasZeroDerivatives) {
    const auto a = arch(2, 1, 2, 4);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(a.parameter_count());
    theta[a.frequency_offset() - 1] = 2.5;  // output bias
    theta.tail(2).setOnes();
    Mlp net(a, theta);
    const double in[] = {0.3, 0.7};
    const ModelEval m = net.forward_with_input_derivatives(in, {.t = 1, .x = 0}, Channels::pde_1d());
    EXPECT_EQ(m.u, 2.5);
    EXPECT_EQ(m.u_t, 0.0);
    EXPECT_EQ(*m.u_x, 0.0);
    EXPECT_EQ(*m.u_xx, 0.0);
}

TEST(Derivatives, LinearFunctionThreeX) {
    // snake(x) - snake(-x) = 2x, so 1.5 snake(x) - 1.5 snake(-x) = 3x.
    const auto a = arch(2, 1, 1, 2);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(a.parameter_count());
    theta[0] = 1.0;   // W1(0,0): unit 0 reads x
    theta[1] = -1.0;  // W1(1,0): unit 1 reads -x
    theta[6] = 1.5;
    theta[7] = -1.5;
    theta[9] = 1.3;  // frequency
    Mlp net(a, theta);
    for (double x : {-2.0, -0.3, 0.0, 0.8, 5.0}) {
        const double in[] = {x, 0.5};
        const ModelEval m = net.forward_with_input_derivatives(in, {.t = 1, .x = 0}, Channels::pde_1d());
        EXPECT_NEAR(m.u, 3 * x, 1e-13);
        EXPECT_NEAR(*m.u_x, 3.0, 1e-13);
        EXPECT_NEAR(*m.u_xx, 0.0, 1e-12);
        EXPECT_EQ(m.u_t, 0.0);
    }
}

TEST(Derivatives, MissingRoleThrows) {
    Mlp net = Mlp::xavier(arch(2, 1, 1, 3), 1);
    const double in[] = {0.1, 0.2};
    EXPECT_THROW(net.forward_with_input_derivatives(in, {.t = 1, .x = std::nullopt}, Channels::pde_1d()), InvalidArgument);
    EXPECT_THROW(net.forward_with_input_derivatives(in, {}, Channels::ode()), InvalidArgument);
    Mlp wide = Mlp::xavier(arch(2, 3, 1, 3), 1);
    EXPECT_THROW(wide.forward_with_input_derivatives(in, {.t = 1, .x = std::nullopt}, Channels::ode()), InvalidArgument);
}

TEST(Derivatives, MatchFiniteDifferencesOnRandomNets) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> layers(1, 4), width(2, 24), dim(2, 6), act(0, 1);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = arch(dim(rng), 1, layers(rng), width(rng), act(rng) ? Activation::snake : Activation::tanh);
        const Mlp net = random_net(a, 100 + trial);
        std::vector<double> in(a.input_dim);
        for (double& v : in) v = coord(rng);
        const InputRoles roles{.t = 1, .x = 0};
        const ModelEval m = net.forward_with_input_derivatives(in, roles, Channels::pde_1d());
        auto f = [&](double x, double t) {
            std::vector<double> p = in;
            p[0] = x;
            p[1] = t;
            return net.forward(p)[0];
        };
        const auto fd = nmtest::finite_difference_jet(f, in[0], in[1], 1e-3);
        const double e = std::max({nmtest::relative_error(m.u_t, fd.u_t, 1e-3),
                                   nmtest::relative_error(*m.u_x, fd.u_x, 1e-3),
                                   nmtest::relative_error(*m.u_xx, fd.u_xx, 1e-3)});
        worst = std::max(worst, e);
        EXPECT_LT(e, 1e-5) << "trial " << trial << " arch " << a.header();
    }
    RecordProperty("worst_relative_error", std::to_string(worst));
}

TEST(Derivatives, BatchMatchesPointwise) {
    const auto a = arch(4, 1, 3, 10);
    const Mlp net = random_net(a, 77);
    Eigen::MatrixXd in = Eigen::MatrixXd::Random(4, 13);
    const InputRoles roles{.t = 2, .x = 0};
    const Eigen::MatrixXd out = net.forward_batch(in, roles, Channels::pde_1d());
    const ChannelLayout layout(Channels::pde_1d());
    for (Eigen::Index j = 0; j < in.cols(); ++j) {
        const std::vector<double> p(in.col(j).data(), in.col(j).data() + 4);
        const ModelEval m = net.forward_with_input_derivatives(p, roles, Channels::pde_1d());
        // Batched products may round differently from single columns.
        EXPECT_NEAR(out(0, j), m.u, 1e-13);
        EXPECT_NEAR(out(0, layout.block(Channel::dt) * 13 + j), m.u_t, 1e-13);
        EXPECT_NEAR(out(0, layout.block(Channel::dxx) * 13 + j), *m.u_xx, 1e-12);
    }
}

TEST(Forward, ContinuousInTheta) {
    const auto a = arch(3, 1, 3, 16);
    const Mlp base = random_net(a, 8);
    const double in[] = {0.4, -0.2, 0.9};
    const double u0 = base.forward(in)[0];
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::VectorXd dir(base.theta().size());
    for (Eigen::Index i = 0; i < dir.size(); ++i) dir[i] = n(rng);
    dir.normalize();
    std::vector<double> ratios;
    for (double delta : {1e-4, 1e-6, 1e-8}) {
        Mlp p(a, base.theta() + delta * dir);
        ratios.push_back(std::abs(p.forward(in)[0] - u0) / delta);
    }
    // Difference quotients settle on the directional derivative.
    EXPECT_LT(ratios[0], 100.0);
    EXPECT_NEAR(ratios[1], ratios[2], 1e-3 * std::max(1.0, ratios[1]));
}

TEST(Backward, FrequencyGradientIsNonzero) {
    const auto a = arch(2, 1, 3, 8);
    const Mlp net = random_net(a, 12);
    const Eigen::MatrixXd in = Eigen::MatrixXd::Random(2, 20);
    MlpTape tape;
    const Eigen::MatrixXd out = net.forward_batch(in, {.t = 1, .x = 0}, Channels::pde_1d(), &tape);
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.theta().size());
    net.backward(tape, out, grad);  // gradient of 0.5 * sum of squares
    for (std::size_t k = 0; k < a.hidden_layers; ++k) {
        EXPECT_NE(grad[static_cast<Eigen::Index>(a.frequency_offset() + k)], 0.0) << "layer " << k;
    }
}

TEST(Backward, MatchesFiniteDifferences) {
    for (auto act : {Activation::snake, Activation::tanh}) {
        const auto a = arch(3, 2, 2, 6, act);
        const Mlp net = random_net(a, 21);
        const Eigen::MatrixXd in = Eigen::MatrixXd::Random(3, 7);
        const InputRoles roles{.t = 1, .x = 0};
        const Eigen::MatrixXd weights = Eigen::MatrixXd::Random(2, 4 * 7);
        auto loss = [&](const Eigen::VectorXd& th) {
            Mlp m(a, th);
            return (m.forward_batch(in, roles, Channels::pde_1d()).array() * weights.array()).sum();
        };
        MlpTape tape;
        net.forward_batch(in, roles, Channels::pde_1d(), &tape);
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.theta().size());
        net.backward(tape, weights, grad);
        for (Eigen::Index i = 0; i < grad.size(); ++i) {
            Eigen::VectorXd p = net.theta(), q = net.theta();
            const double h = 1e-6;
            p[i] += h;
            q[i] -= h;
            const double fd = (loss(p) - loss(q)) / (2 * h);
            EXPECT_LT(nmtest::relative_error(grad[i], fd, 1e-2), 1e-6) << to_string(act) << " theta " << i;
        }
    }
}

TEST(Checkpoint, RoundTripIsBitwise) {
    TempDir dir("ckpt");
    const auto a = arch(4, 3, 2, 7);
    const Mlp net = random_net(a, 4);
    const auto path = dir.path() / "sub" / "net.bin";
    save_checkpoint(path, net);
    const Mlp back = load_checkpoint(path);
    EXPECT_EQ(back.architecture(), a);
    ASSERT_EQ(back.theta().size(), net.theta().size());
    EXPECT_EQ(0, std::memcmp(back.theta().data(), net.theta().data(), sizeof(double) * net.theta().size()));
    const auto bytes = nmtest::read_file(path);
    EXPECT_EQ(bytes.substr(0, 6), "arch: ");
    EXPECT_EQ(bytes.size(), ("arch: " + a.header() + "\n").size() + 8 * a.parameter_count());
}

TEST(Checkpoint, CorruptFilesAreRejected) {
    TempDir dir("ckpt_bad");
    const Mlp net = Mlp::xavier(arch(2, 1, 1, 3), 1);
    const auto path = dir.path() / "net.bin";
    save_checkpoint(path, net);
    auto bytes = nmtest::read_file(path);
    {
        std::ofstream out(path, std::ios::binary);
        out << bytes.substr(0, bytes.size() - 3);
    }
    EXPECT_THROW(load_checkpoint(path), IoError);
    {
        std::ofstream out(path, std::ios::binary);
        out << bytes << "xx";
    }
    EXPECT_THROW(load_checkpoint(path), IoError);
    {
        std::ofstream out(path, std::ios::binary);
        out << "nonsense";
    }
    EXPECT_THROW(load_checkpoint(path), IoError);
    EXPECT_THROW(load_checkpoint(dir.path() / "absent.bin"), IoError);
}

TEST(TrigKernel, MatchesLibm) {
    std::mt19937_64 rng(5);
    std::vector<double> x;
    for (double scale : {1e-8, 1.0, 10.0, 1e3, 5e4, 1e6}) {
        std::uniform_real_distribution<double> u(-scale, scale);
        for (int i = 0; i < 2000; ++i) x.push_back(u(rng));
    }
    x.push_back(0.0);
    x.push_back(-0.0);
    x.push_back(kPi / 4);
    x.push_back(kPi / 2);
    std::vector<double> s(x.size()), c(x.size());
    detail::sincos_array(x.data(), s.data(), c.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_NEAR(s[i], std::sin(x[i]), 4.5e-16) << x[i];
        EXPECT_NEAR(c[i], std::cos(x[i]), 4.5e-16) << x[i];
    }
}
