#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <gtest/gtest.h>

#include "nmeasure/core/error.hpp"
#include "nmeasure/train/lbfgs.hpp"

using namespace nmeasure;

namespace {

double rosenbrock(const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    double f = 0.0;
    g = Eigen::VectorXd::Zero(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        f += 100.0 * a * a + b * b;
        g[i] += -400.0 * a * x[i] - 2.0 * b;
        g[i + 1] += 200.0 * a;
    }
    return f;
}

}  // namespace

TEST(Lbfgs, MinimizesRosenbrock) {
    Eigen::VectorXd x(4);
    x << -1.2, 1.0, -1.2, 1.0;
    LbfgsOptions o;
    o.tolerance_change = 0.0;
    o.tolerance_grad = 1e-12;
    Lbfgs opt(o);
    for (int k = 0; k < 20; ++k) opt.step(x, rosenbrock);
    EXPECT_LT((x - Eigen::VectorXd::Ones(4)).norm(), 1e-6);
}

TEST(Lbfgs, QuadraticInFewIterations) {
    // Strictly convex quadratic: L-BFGS with exact curvature pairs converges fast.
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(6, 6);
    const Eigen::MatrixXd h = a * a.transpose() + 6 * Eigen::MatrixXd::Identity(6, 6);
    const Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(6, -1, 1);
    Objective quad = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
        g = h * x - b;
        return 0.5 * x.dot(h * x) - b.dot(x);
    };
    Eigen::VectorXd x = Eigen::VectorXd::Zero(6);
    LbfgsOptions o;
    o.tolerance_change = 0.0;
    o.tolerance_grad = 1e-12;
    Lbfgs opt(o);
    opt.step(x, quad);
    EXPECT_LT((x - h.ldlt().solve(b)).norm(), 1e-6);
}

TEST(Lbfgs, EveryStepDecreasesTheObjective) {
    Eigen::VectorXd x(2);
    x << -1.5, 2.0;
    LbfgsOptions o;
    o.max_iterations = 1;
    Lbfgs opt(o);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 60; ++k) {
        const auto r = opt.step(x, rosenbrock);
        EXPECT_LE(r.final_loss, r.initial_loss);
        EXPECT_LE(r.initial_loss, prev);
        prev = r.final_loss;
        Eigen::VectorXd g;
        EXPECT_DOUBLE_EQ(rosenbrock(x, g), r.final_loss);
    }
}

TEST(Lbfgs, HistoryIsBoundedAndResettable) {
    Eigen::VectorXd x(6);
    x.setConstant(-0.5);
    LbfgsOptions o;
    o.history_size = 3;
    Lbfgs opt(o);
    opt.step(x, rosenbrock);
    EXPECT_LE(opt.history_length(), 3u);
    EXPECT_GT(opt.history_length(), 0u);
    opt.reset();
    EXPECT_EQ(opt.history_length(), 0u);
}

TEST(Lbfgs, NonFiniteStartThrows) {
    Objective bad = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
        g = Eigen::VectorXd::Zero(x.size());
        return std::numeric_limits<double>::quiet_NaN();
    };
    Eigen::VectorXd x = Eigen::VectorXd::Zero(3);
    Lbfgs opt;
    EXPECT_THROW(opt.step(x, bad), NonFiniteValue);
}

TEST(Lbfgs, BacksOffFromOverflowingTrialPoints) {
    // f = exp(x) - 2x is finite everywhere but the first trial may overflow
    // with a huge step; the search must still make progress.
    Objective f = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
        g.resize(1);
        if (x[0] > 700) {
            g[0] = std::numeric_limits<double>::infinity();
            return std::numeric_limits<double>::infinity();
        }
        g[0] = std::exp(x[0]) - 2.0;
        return std::exp(x[0]) - 2.0 * x[0];
    };
    Eigen::VectorXd x(1);
    x << -800.0;  // gradient -2, first step of length lr * 1/|g| ... far to the right
    LbfgsOptions o;
    o.lr = 1e3;
    Lbfgs opt(o);
    for (int k = 0; k < 10; ++k) opt.step(x, f);
    EXPECT_NEAR(x[0], std::log(2.0), 1e-6);
}

TEST(Lbfgs, InvalidOptionsThrow) {
    LbfgsOptions o;
    o.lr = 0.0;
    EXPECT_THROW(Lbfgs{o}, InvalidArgument);
    o = {};
    o.max_iterations = 0;
    EXPECT_THROW(Lbfgs{o}, InvalidArgument);
    o = {};
    o.history_size = 0;
    EXPECT_THROW(Lbfgs{o}, InvalidArgument);
}

TEST(CubicInterpolate, RecoversQuadraticMinimum) {
    // f = (x - 1)^2: f(0) = 1, f'(0) = -2, f(3) = 4, f'(3) = 4.
    EXPECT_NEAR(cubic_interpolate(0, 1, -2, 3, 4, 4, 0, 3), 1.0, 1e-12);
    EXPECT_NEAR(cubic_interpolate(3, 4, 4, 0, 1, -2, 0, 3), 1.0, 1e-12);
}

TEST(CubicInterpolate, RecoversCubicLocalMinimum) {
    // f = x^3 - 3x has its local minimum at x = 1.
    auto f = [](double x) { return x * x * x - 3 * x; };
    auto g = [](double x) { return 3 * x * x - 3; };
    EXPECT_NEAR(cubic_interpolate(0, f(0), g(0), 2, f(2), g(2), 0, 2), 1.0, 1e-12);
}

TEST(CubicInterpolate, ClampsAndFallsBack) {
    EXPECT_DOUBLE_EQ(cubic_interpolate(0, 1, -2, 3, 4, 4, 1.5, 3), 1.5);
    // Concave data without a real minimizer gives the midpoint.
    EXPECT_DOUBLE_EQ(cubic_interpolate(0, 0, 1, 1, 0, -1, 0, 1), 0.5);
    EXPECT_DOUBLE_EQ(cubic_interpolate(0, std::nan(""), 1, 1, 0, -1, 0, 1), 0.5);
}
