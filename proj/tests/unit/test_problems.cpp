#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <gtest/gtest.h>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/statistics.hpp"
#include "nmeasure/problems/problems.hpp"
#include "nmeasure/problems/reference.hpp"
#include "test_support.hpp"

using namespace nmeasure;
using std::numbers::pi;

TEST(Bistable, RhsExamples) {
    EXPECT_DOUBLE_EQ(bistable_rhs(0.0, 1.0), 6.0);
    EXPECT_DOUBLE_EQ(bistable_rhs(1.5, 1.0), -0.375);
    EXPECT_DOUBLE_EQ(bistable_rhs(2.5, 1.0), 0.375);
    EXPECT_DOUBLE_EQ(bistable_rhs(4.0, 1.0), -6.0);
    for (double u : {1.0, 2.0, 3.0}) EXPECT_EQ(bistable_rhs(u, 1.1), 0.0);
    EXPECT_DOUBLE_EQ(bistable_rhs(0.0, 0.8), 0.8 * 6.0);
    for (double u : {-0.3, 0.7, 1.9, 2.6, 3.8}) {
        const double h = 1e-5;
        const double fd = (bistable_rhs(u + h, 0.9) - bistable_rhs(u - h, 0.9)) / (2 * h);
        EXPECT_NEAR(bistable_rhs_du(u, 0.9), fd, 1e-8);
    }
}

TEST(Bistable, ImplicitSolverMatchesAdaptiveIntegrator) {
    // Independent oracle: Dormand-Prince with tight tolerances.
    namespace ode = boost::numeric::odeint;
    std::vector<double> grid;
    for (int i = 0; i <= 16; ++i) grid.push_back(0.5 * i);
    for (double u0 : {0.1, 1.4, 1.95, 2.05, 2.8, 3.9}) {
        for (double r : {0.8, 1.2}) {
            const auto be = solve_bistable_reference(u0, r, grid, 1e-4);
            ASSERT_EQ(be.size(), grid.size());
            EXPECT_EQ(be[0], u0);
            std::vector<double> state{u0};
            auto rhs = [r](const std::vector<double>& y, std::vector<double>& dy, double) {
                dy[0] = r * (y[0] - 1) * (2 - y[0]) * (y[0] - 3);
            };
            for (std::size_t n = 1; n < grid.size(); ++n) {
                ode::integrate_adaptive(ode::make_controlled<ode::runge_kutta_dopri5<std::vector<double>>>(1e-12, 1e-12),
                                        rhs, state, grid[n - 1], grid[n], 1e-3);
                // First-order scheme with step 1e-4.
                EXPECT_NEAR(be[n], state[0], 2e-3) << "u0=" << u0 << " r=" << r << " t=" << grid[n];
            }
        }
    }
}

TEST(Bistable, ImplicitSolverIsFirstOrder) {
    const std::vector<double> grid{0.0, 1.0};
    const double exact_ish = solve_bistable_reference(0.5, 1.0, grid, 1e-5)[1];
    const double e1 = std::abs(solve_bistable_reference(0.5, 1.0, grid, 1e-2)[1] - exact_ish);
    const double e2 = std::abs(solve_bistable_reference(0.5, 1.0, grid, 5e-3)[1] - exact_ish);
    EXPECT_NEAR(std::log2(e1 / e2), 1.0, 0.1);
}

TEST(Bistable, EnsembleSplitsIntoTheTwoAttractors) {
    const auto problem = make_bistable_problem();
    const Eigen::MatrixXd xi = problem.params.sample(1000, 17);
    const std::vector<SpaceTime> grid{{0.0, 0.0}, {0.0, 8.0}};
    const auto e = reference_ensemble("bistable", xi, grid);
    std::size_t near = 0, low = 0, below_two = 0;
    for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
        EXPECT_EQ(e.values(i, 0), xi(i, 0));
        const double u = e.values(i, 1);
        if (std::abs(u - 1) <= 0.05 || std::abs(u - 3) <= 0.05) ++near;
        if (u < 2) ++low;
        if (xi(i, 0) < 2) ++below_two;
    }
    // Every trajectory ends at the attractor on its side of u = 2. Draws
    // within ~1e-3 of 2 would still be leaving it at t = 8; this seed has none.
    EXPECT_EQ(near, 1000u);
    EXPECT_EQ(low, below_two);
    for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
        const double target = xi(i, 0) < 2 ? 1.0 : 3.0;
        EXPECT_LE(std::abs(e.values(i, 1) - target), 0.05) << "u0=" << xi(i, 0) << " r=" << xi(i, 1);
    }
    const double se = std::sqrt(0.25 / 1000);
    EXPECT_NEAR(static_cast<double>(low) / 1000, 0.5, 3 * se);
}

TEST(Diffusion, ExactSolutionExamples) {
    EXPECT_DOUBLE_EQ(diffusion_exact(2.0, 1.0, pi / 2, 0.0), 1.0);
    EXPECT_NEAR(diffusion_exact(2.0, 1.0, pi / 2, 0.5), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(diffusion_exact(1.5, 2.0, 0.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(diffusion_exact(1.0, 3.0, pi / 6, 1.0), std::exp(-1.0), 1e-15);
    const auto fd_f = [](double x, double t) { return diffusion_exact(2.3, 1.7, x, t); };
    const auto jet = diffusion_exact_jet(2.3, 1.7, 1.1, 0.4);
    const auto fd = nmtest::finite_difference_jet(fd_f, 1.1, 0.4, 1e-3);
    EXPECT_NEAR(jet.u, fd_f(1.1, 0.4), 1e-15);
    EXPECT_NEAR(jet.u_t, fd.u_t, 1e-9);
    EXPECT_NEAR(*jet.u_x, fd.u_x, 1e-9);
    EXPECT_NEAR(*jet.u_xx, fd.u_xx, 1e-8);
    // u_t = (a / k^2) u_xx
    EXPECT_NEAR(jet.u_t, 2.3 / (1.7 * 1.7) * *jet.u_xx, 1e-14);
}

TEST(Diffusion, ExactSolutionHasZeroResidual) {
    const auto problem = make_diffusion_problem();
    const Eigen::MatrixXd xi = problem.params.sample(1000, 5);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ux(0, pi), ut(0, 1);
    double worst = 0;
    for (Eigen::Index i = 0; i < xi.rows(); ++i) {
        const double x = ux(rng), t = ut(rng);
        const double row[] = {xi(i, 0), xi(i, 1)};
        const auto m = diffusion_exact_jet(row[0], row[1], x, t);
        worst = std::max(worst, std::abs(problem.interior.residual(FieldDuals::seeded(m), x, t, row).v));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Diffusion, ReferenceMeanMatchesQuadrature) {
    const auto problem = make_diffusion_problem();
    const std::size_t n = 20000;
    const Eigen::MatrixXd xi = problem.params.sample(n, 23);
    const std::vector<SpaceTime> grid{{0.5, 0.1}, {1.3, 0.5}, {2.9, 1.0}};
    const auto e = reference_ensemble("diffusion", xi, grid);
    const auto m = ensemble_moments(e);
    const auto gl = nmtest::gauss_legendre_32();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double mean = 0, second = 0;
        for (const auto& [ya, wa] : gl) {
            for (const auto& [yk, wk] : gl) {
                const double v = diffusion_exact(2 + ya, 2 + yk, grid[j].x, grid[j].t);
                mean += 0.25 * wa * wk * v;
                second += 0.25 * wa * wk * v * v;
            }
        }
        const double sd = std::sqrt(second - mean * mean);
        EXPECT_NEAR(m.mean[j], mean, 3 * sd / std::sqrt(double(n))) << j;
        EXPECT_NEAR(m.std[j], sd, 0.05 * sd) << j;
    }
}

TEST(ReactionDiffusion, CoefficientExamples) {
    EXPECT_DOUBLE_EQ(reaction_g(0.0, 0.7, 3.5), 1.2);
    EXPECT_NEAR(reaction_g(0.5, 1.0, 3.0), 0.2 + std::exp(0.5) * std::pow(std::cos(1.5), 2), 1e-15);
    EXPECT_NEAR(forcing_f(0.25, 0.5, 2.0), std::pow(std::sin(0.5), 2), 1e-15);
    EXPECT_NEAR(forcing_f(1.0, 0.5, 2.0), std::exp(-0.5625 / 0.5) * std::pow(std::sin(2.0), 2), 1e-15);
    EXPECT_DOUBLE_EQ(reaction_initial(0.0), 0.5);
    EXPECT_NEAR(reaction_initial(0.5), 0.0, 1e-16);
    EXPECT_NEAR(reaction_initial(1.0), 0.5, 1e-15);
    EXPECT_NEAR(reaction_initial(-1.0), 0.5, 1e-15);
    // g stays positive and f non-negative over the parameter box.
    for (double x = -1; x <= 1; x += 0.05) {
        for (double r1 : {0.5, 1.0}) {
            for (double r2 : {3.0, 3.5, 4.0}) EXPECT_GE(reaction_g(x, r1, r2), 0.2);
        }
        for (double k1 : {0.2, 0.8}) {
            for (double k2 : {1.0, 4.0}) EXPECT_GE(forcing_f(x, k1, k2), 0.0);
        }
    }
}

TEST(ReactionDiffusion, ConstantSteadyStateIsPreserved) {
    ReactionDiffusionSetup s;
    s.reaction = [](double) { return 0.0; };
    s.forcing = [](double) { return 0.0; };
    s.initial = [](double) { return 0.5; };
    const auto f = solve_reaction_diffusion(s, 32, 32);
    EXPECT_LT((f.values.array() - 0.5).abs().maxCoeff(), 1e-14);
    // Balanced reaction and forcing: g u^3 = f at u = 0.5.
    s.reaction = [](double x) { return 1 + x * x; };
    s.forcing = [](double x) { return 0.125 * (1 + x * x); };
    EXPECT_LT((solve_reaction_diffusion(s, 32, 32).values.array() - 0.5).abs().maxCoeff(), 1e-10);
}

TEST(ReactionDiffusion, GridAndInitialRow) {
    const auto f = solve_reaction_diffusion_reference(0.7, 3.5, 0.5, 2.0, 40, 20);
    ASSERT_EQ(f.xs.size(), 41u);
    ASSERT_EQ(f.ts.size(), 21u);
    EXPECT_EQ(f.values.rows(), 21);
    EXPECT_EQ(f.values.cols(), 41);
    EXPECT_DOUBLE_EQ(f.xs.front(), -1.0);
    EXPECT_DOUBLE_EQ(f.xs.back(), 1.0);
    EXPECT_DOUBLE_EQ(f.ts.back(), 4.0);
    for (std::size_t i = 0; i < f.xs.size(); ++i) EXPECT_NEAR(f.values(0, i), reaction_initial(f.xs[i]), 1e-15);
    for (Eigen::Index n = 0; n < f.values.rows(); ++n) {
        EXPECT_NEAR(f.values(n, 0), 0.5, 1e-15);
        EXPECT_NEAR(f.values(n, 40), 0.5, 1e-15);
    }
    EXPECT_NEAR(f.interpolate(f.xs[3], f.ts[5]), f.values(5, 3), 1e-15);
    const double mid = 0.5 * (f.values(5, 3) + f.values(5, 4));
    EXPECT_NEAR(f.interpolate(0.5 * (f.xs[3] + f.xs[4]), f.ts[5]), mid, 1e-15);
    EXPECT_THROW(solve_reaction_diffusion_reference(0.7, 3.5, 0.5, 2.0, 8, 20), InvalidArgument);
}

TEST(ReactionDiffusion, SelfConvergenceIsSecondOrder) {
    auto at = [](const SpaceTimeField& f, std::size_t stride) {
        // Coarsest-grid nodes of a refined solution.
        Eigen::MatrixXd out(17, 17);
        for (int n = 0; n <= 16; ++n) {
            for (int i = 0; i <= 16; ++i) out(n, i) = f.values(n * stride * 2, i * stride);
        }
        return out;
    };
    // nt grows with nx so that dt and dx shrink together.
    const auto f1 = solve_reaction_diffusion_reference(0.8, 3.2, 0.4, 2.5, 32, 64);
    const auto f2 = solve_reaction_diffusion_reference(0.8, 3.2, 0.4, 2.5, 64, 128);
    const auto f3 = solve_reaction_diffusion_reference(0.8, 3.2, 0.4, 2.5, 128, 256);
    const double e1 = (at(f1, 2) - at(f2, 4)).cwiseAbs().maxCoeff();
    const double e2 = (at(f2, 4) - at(f3, 8)).cwiseAbs().maxCoeff();
    EXPECT_GE(std::log2(e1 / e2), 1.9) << e1 << " " << e2;
}

TEST(ReactionDiffusion, EnsembleIsBounded) {
    const auto problem = make_reaction_diffusion_problem();
    const Eigen::MatrixXd xi = problem.params.sample(20, 3);
    const auto grid = uniform_grid(problem.domain, 11, 9);
    const auto e = reference_ensemble("reaction_diffusion", xi, grid);
    EXPECT_NO_THROW(e.validate());
    EXPECT_GE(e.values.minCoeff(), 0.0);
    EXPECT_LE(e.values.maxCoeff(), 1.5);
    // Every corner of the parameter box on the default solver grid.
    for (int c = 0; c < 16; ++c) {
        const double r1 = c & 1 ? 1.0 : 0.5, r2 = c & 2 ? 4.0 : 3.0;
        const double k1 = c & 4 ? 0.8 : 0.2, k2 = c & 8 ? 4.0 : 1.0;
        const auto f = solve_reaction_diffusion_reference(r1, r2, k1, k2, kReferenceNx, kReferenceNt);
        EXPECT_TRUE(f.values.allFinite()) << c;
        EXPECT_LE(f.values.cwiseAbs().maxCoeff(), 10.0) << c;
    }
}

TEST(Problems, Registry) {
    EXPECT_EQ(problem_names(), (std::vector<std::string>{"bistable", "diffusion", "reaction_diffusion"}));
    for (const auto& n : problem_names()) EXPECT_EQ(make_problem(n).name, n);
    try {
        make_problem("heat");
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("reaction_diffusion"), std::string::npos);
    }
    EXPECT_THROW(reference_ensemble("heat", Eigen::MatrixXd::Zero(1, 2), {{0, 0}}), InvalidArgument);
}
