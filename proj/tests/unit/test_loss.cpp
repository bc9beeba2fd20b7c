#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "nmeasure/core/error.hpp"
#include "nmeasure/loss/collocation.hpp"
#include "nmeasure/loss/residual_loss.hpp"
#include "nmeasure/problems/problems.hpp"
#include "test_support.hpp"

using namespace nmeasure;

namespace {

CollocationBatch batch_for(const RandomProblem& p, std::size_t nx, std::size_t nt, std::size_t nxi,
                           std::uint64_t seed) {
    CollocationBatch b =
        sample_collocation(p, {nx, nt, std::max(nx, nt), std::max(nx, nt)}, SamplingStrategy::uniform_random, seed);
    b.set_parameters(p.params, p.params.sample(nxi, seed + 1));
    return b;
}

}  // namespace

TEST(Loss, ExactDiffusionSolutionHasZeroLoss) {
    const auto problem = make_diffusion_problem();
    nmtest::ExactMeasure exact(problem, *problem.exact_solution);
    const auto b = batch_for(problem, 10, 10, 10, 5);  // 10^3 interior (point, xi) pairs
    const double loss = residual_loss(exact, problem, b, {});
    EXPECT_LT(loss, 1e-10);
    EXPECT_GE(loss, 0.0);
}

TEST(Loss, ZeroModelOnBistableByHand) {
    const auto problem = make_bistable_problem();
    auto m = nmtest::random_measure(MeasureVariant::fullnn, problem, 2, 4, 1);
    m->theta().setZero();
    for (double r : {0.8, 1.0, 1.13}) {
        CollocationBatch b;
        b.interior = {{0.0, 3.0}};
        b.initial = {{0.0, 0.0}};
        Eigen::MatrixXd xi(1, 2);
        xi << 2.0, r;
        b.set_parameters(problem.params, xi);
        // interior residual 0 - r(0-1)(2-0)(0-3) = -6r; initial residual 0 - u0 = -2
        const double loss = residual_loss(*m, problem, b, {1.0, 0.0, 1.0});
        EXPECT_NEAR(loss, 36 * r * r + 4, 1e-12);
        const auto e = evaluate_loss(*m, problem, b, {1.0, 0.0, 1.0}, false);
        EXPECT_NEAR(e.terms[0], 36 * r * r, 1e-12);
        EXPECT_NEAR(e.terms[2], 4.0, 1e-15);
        EXPECT_EQ(e.value, e.terms[0] + e.terms[1] + e.terms[2]);
    }
}

TEST(Loss, DoublingWeightsDoublesLoss) {
    const auto problem = make_reaction_diffusion_problem();
    auto m = nmtest::random_measure(MeasureVariant::fullnn, problem, 2, 8, 3);
    const auto b = batch_for(problem, 5, 4, 6, 9);
    const LossWeights w{0.7, 1.3, 0.4};
    const LossWeights w2{1.4, 2.6, 0.8};
    EXPECT_EQ(residual_loss(*m, problem, b, w2), 2 * residual_loss(*m, problem, b, w));
}

TEST(Loss, WeightsAreValidated) {
    EXPECT_THROW((LossWeights{0.0, 0.0, 0.0}.validate()), InvalidArgument);
    EXPECT_THROW((LossWeights{-1.0, 1.0, 1.0}.validate()), InvalidArgument);
    EXPECT_NO_THROW((LossWeights{0.0, 0.0, 2.0}.validate()));
}

TEST(Loss, GradientMatchesFiniteDifferences) {
    const MeasureVariant variants[] = {MeasureVariant::fullnn, MeasureVariant::pce_nn, MeasureVariant::galerkin_nn};
    for (const auto& name : problem_names()) {
        const auto problem = make_problem(name);
        for (auto v : variants) {
            auto m = nmtest::random_measure(v, problem, 2, 5, 17);
            nmtest::jitter_theta(*m, 18, 0.1);
            const auto b = batch_for(problem, 3, 3, 4, 21);
            const auto e = evaluate_loss(*m, problem, b, {1.0, 0.5, 2.0}, true);
            ASSERT_EQ(e.gradient.size(), m->theta().size());
            for (Eigen::Index i = 0; i < e.gradient.size(); ++i) {
                auto p = m->clone(), q = m->clone();
                const double h = 1e-6;
                p->theta()[i] += h;
                q->theta()[i] -= h;
                const double fd = (residual_loss(*p, problem, b, {1.0, 0.5, 2.0}) -
                                   residual_loss(*q, problem, b, {1.0, 0.5, 2.0})) /
                                  (2 * h);
                EXPECT_LT(nmtest::relative_error(e.gradient[i], fd, 1e-3), 1e-4)
                    << name << " " << to_string(v) << " theta " << i;
            }
        }
    }
}

TEST(Loss, PermutingPointsLeavesLossUnchanged) {
    const auto problem = make_diffusion_problem();
    auto m = nmtest::random_measure(MeasureVariant::fullnn, problem, 3, 12, 4);
    auto b = batch_for(problem, 20, 10, 30, 8);
    const double before = residual_loss(*m, problem, b, {});
    std::mt19937_64 rng(1);
    std::shuffle(b.interior.begin(), b.interior.end(), rng);
    for (auto& pts : b.boundary) std::shuffle(pts.begin(), pts.end(), rng);
    std::shuffle(b.initial.begin(), b.initial.end(), rng);
    EXPECT_NEAR(residual_loss(*m, problem, b, {}), before, 1e-12 * before);
}

TEST(Loss, NonFiniteResidualNamesPointAndParameters) {
    const auto problem = make_diffusion_problem();
    ExactSolution broken = [](double x, double t, std::span<const double> xi) {
        ModelEval m = diffusion_exact_jet(xi[0], xi[1], x, t);
        if (t > 0.5) m.u_t = std::numeric_limits<double>::quiet_NaN();
        return m;
    };
    nmtest::ExactMeasure m(problem, broken);
    CollocationBatch b;
    b.interior = {{1.0, 0.25}, {2.0, 0.75}};
    b.boundary = {{{0.0, 0.1}}, {{std::numbers::pi, 0.1}}};
    b.initial = {{1.0, 0.0}};
    Eigen::MatrixXd xi(1, 2);
    xi << 1.5, 2.5;
    b.set_parameters(problem.params, xi);
    try {
        residual_loss(m, problem, b, {});
        FAIL() << "expected NonFiniteValue";
    } catch (const NonFiniteValue& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("interior"), std::string::npos) << what;
        EXPECT_NE(what.find("x=2"), std::string::npos) << what;
        EXPECT_NE(what.find("t=0.75"), std::string::npos) << what;
        EXPECT_NE(what.find("1.5, 2.5"), std::string::npos) << what;
    }
}

TEST(Loss, MissingParametersRejected) {
    const auto problem = make_bistable_problem();
    auto m = nmtest::random_measure(MeasureVariant::fullnn, problem, 1, 3, 1);
    auto b = sample_collocation(problem, {1, 5, 1, 1}, SamplingStrategy::uniform_random, 1);
    EXPECT_THROW(residual_loss(*m, problem, b, {}), InvalidArgument);
    Eigen::MatrixXd bad(1, 2);
    bad << 5.0, 1.0;
    EXPECT_THROW(b.set_parameters(problem.params, bad), InvalidArgument);
}

TEST(Loss, MonteCarloConsistencyAcrossBatchSizes) {
    // Interior term with 10^4 vs 10^5 parameter draws: batch means of equal
    // groups give each estimate and its standard error.
    const auto problem = make_diffusion_problem();
    auto m = nmtest::random_measure(MeasureVariant::fullnn, problem, 2, 8, 5);
    nmtest::jitter_theta(*m, 6, 0.2);
    auto pts = sample_collocation(problem, {5, 4, 1, 1}, SamplingStrategy::uniform_random, 3);
    auto estimate = [&](std::size_t n, std::uint64_t seed) {
        const std::size_t groups = 100;
        const Eigen::MatrixXd xi = problem.params.sample(n, seed);
        std::vector<double> means;
        for (std::size_t g = 0; g < groups; ++g) {
            CollocationBatch b = pts;
            b.set_parameters(problem.params, xi.middleRows(static_cast<Eigen::Index>(g * n / groups),
                                                            static_cast<Eigen::Index>(n / groups)));
            means.push_back(evaluate_loss(*m, problem, b, {1.0, 0.0, 0.0}, false).terms[0]);
        }
        double mean = 0.0;
        for (double v : means) mean += v / double(groups);
        double var = 0.0;
        for (double v : means) var += (v - mean) * (v - mean) / double(groups - 1);
        return std::pair{mean, std::sqrt(var / double(groups))};
    };
    const auto [a, sa] = estimate(10000, 1);
    const auto [b, sb] = estimate(100000, 2);
    EXPECT_LT(std::abs(a - b), 3 * std::sqrt(sa * sa + sb * sb));
}

TEST(Collocation, CartesianCounts) {
    const auto problem = make_diffusion_problem();
    const auto b200 = sample_collocation(problem, {20, 10, 20, 20}, SamplingStrategy::cartesian_product, 1);
    EXPECT_EQ(b200.interior.size(), 200u);
    const auto b800 = sample_collocation(problem, {40, 20, 40, 40}, SamplingStrategy::cartesian_product, 1);
    EXPECT_EQ(b800.interior.size(), 800u);
    // The product uses only n_x distinct x and n_t distinct t values.
    std::vector<double> xs, ts;
    for (const auto& p : b200.interior) {
        xs.push_back(p.x);
        ts.push_back(p.t);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ts.begin(), ts.end());
    EXPECT_EQ(std::unique(xs.begin(), xs.end()) - xs.begin(), 20);
    EXPECT_EQ(std::unique(ts.begin(), ts.end()) - ts.begin(), 10);
}

TEST(Collocation, PointsInsideTheirSets) {
    const auto problem = make_reaction_diffusion_problem();
    for (auto s : {SamplingStrategy::uniform_random, SamplingStrategy::cartesian_product}) {
        const auto b = sample_collocation(problem, {7, 9, 11, 13}, s, 4);
        EXPECT_EQ(b.interior.size(), 63u);
        for (const auto& p : b.interior) EXPECT_TRUE(problem.domain.contains(p.x, p.t));
        ASSERT_EQ(b.boundary.size(), 2u);
        for (std::size_t k = 0; k < 2; ++k) {
            EXPECT_EQ(b.boundary[k].size(), 11u);
            for (const auto& p : b.boundary[k]) {
                EXPECT_EQ(p.x, problem.boundaries[k].x);
                EXPECT_TRUE(problem.domain.time().contains(p.t));
            }
        }
        EXPECT_EQ(b.initial.size(), 13u);
        for (const auto& p : b.initial) {
            EXPECT_EQ(p.t, 0.0);
            EXPECT_TRUE(problem.domain.space().contains(p.x));
        }
    }
}

TEST(Collocation, OdeCollapsesSpatialAxis) {
    const auto problem = make_bistable_problem();
    const auto b = sample_collocation(problem, {20, 100, 5, 5}, SamplingStrategy::cartesian_product, 2);
    EXPECT_EQ(b.interior.size(), 100u);
    for (const auto& p : b.interior) {
        EXPECT_EQ(p.x, 0.0);
        EXPECT_GE(p.t, 0.0);
        EXPECT_LE(p.t, 8.0);
    }
    EXPECT_TRUE(b.boundary.empty());
    ASSERT_EQ(b.initial.size(), 1u);
    EXPECT_EQ(b.initial[0].t, 0.0);
}

TEST(Collocation, DeterministicInSeedAndRejectsZeroCounts) {
    const auto problem = make_diffusion_problem();
    const auto a = sample_collocation(problem, {4, 4, 4, 4}, SamplingStrategy::uniform_random, 9);
    const auto b = sample_collocation(problem, {4, 4, 4, 4}, SamplingStrategy::uniform_random, 9);
    for (std::size_t i = 0; i < a.interior.size(); ++i) {
        EXPECT_EQ(a.interior[i].x, b.interior[i].x);
        EXPECT_EQ(a.interior[i].t, b.interior[i].t);
    }
    EXPECT_THROW(sample_collocation(problem, {0, 4, 4, 4}, SamplingStrategy::uniform_random, 9), InvalidArgument);
}

TEST(Collocation, ResampleSchedule) {
    EXPECT_EQ(resample_due(50, 50, 100), (ResampleFlags{true, false}));
    EXPECT_EQ(resample_due(100, 50, 100), (ResampleFlags{true, true}));
    EXPECT_EQ(resample_due(0, 50, 100), (ResampleFlags{false, false}));
    EXPECT_EQ(resample_due(0, 1, 1), (ResampleFlags{false, false}));
    EXPECT_EQ(resample_due(7, 1, 3), (ResampleFlags{true, false}));
    EXPECT_THROW(resample_due(3, 0, 1), InvalidArgument);
}
