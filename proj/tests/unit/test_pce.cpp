#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <gtest/gtest.h>

#include "nmeasure/core/error.hpp"
#include "nmeasure/pce/chaos_basis.hpp"
#include "test_support.hpp"

using namespace nmeasure;

namespace {

// Tensorized Gauss-Legendre Gram matrix, weights scaled to the uniform law.
Eigen::MatrixXd quadrature_gram(const ChaosBasis& b) {
    const auto rule = nmtest::gauss_legendre_32();
    const std::size_t K = b.cardinality();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(K, K);
    if (b.dim() == 1) {
        for (const auto& [z, w] : rule) {
            const double p[] = {z};
            const Eigen::VectorXd v = b.eval(p);
            g += (w / 2) * v * v.transpose();
        }
    } else {
        for (const auto& [z0, w0] : rule) {
            for (const auto& [z1, w1] : rule) {
                const double p[] = {z0, z1};
                const Eigen::VectorXd v = b.eval(p);
                g += (w0 * w1 / 4) * v * v.transpose();
            }
        }
    }
    return g;
}

}  // namespace

TEST(Legendre, Examples) {
    for (double z : {-1.0, -0.3, 0.0, 0.6, 1.0}) EXPECT_EQ(legendre_orthonormal(0, z), 1.0);
    EXPECT_EQ(legendre_orthonormal(1, 0.0), 0.0);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_NEAR(legendre_orthonormal(n, 1.0), std::sqrt(2.0 * n + 1.0), 1e-13);
    }
}

TEST(Legendre, OutOfRangeThrows) {
    EXPECT_THROW(legendre_orthonormal(2, 1.0001), InvalidArgument);
    EXPECT_THROW(legendre_orthonormal(0, -2.0), InvalidArgument);
}

TEST(Legendre, MatchesBoostPolynomials) {
    for (unsigned n = 0; n <= 10; ++n) {
        for (double z = -1.0; z <= 1.0; z += 0.0625) {
            EXPECT_NEAR(legendre_orthonormal(n, z), std::sqrt(2.0 * n + 1.0) * boost::math::legendre_p(n, z), 1e-13);
        }
    }
}

TEST(Legendre, UnitNormUnderQuadrature) {
    double s = 0.0;
    for (const auto& [z, w] : nmtest::gauss_legendre_32()) s += w / 2 * std::pow(legendre_orthonormal(1, z), 2);
    EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST(ChaosBasis, Cardinality) {
    EXPECT_EQ(build_basis(2, 5).cardinality(), 21u);
    EXPECT_EQ(build_basis(1, 0).cardinality(), 1u);
    EXPECT_EQ(build_basis(4, 5).cardinality(), 126u);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t p = 0; p <= 6; ++p) {
            const auto expected = static_cast<std::size_t>(boost::math::binomial_coefficient<double>(d + p, p));
            EXPECT_EQ(build_basis(d, p).cardinality(), expected);
            EXPECT_EQ(total_degree_cardinality(d, p), expected);
        }
    }
}

TEST(ChaosBasis, GradedOrdering) {
    const auto b = build_basis(2, 2);
    const std::vector<MultiIndex> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    EXPECT_EQ(b.multi_indices(), expected);
}

TEST(ChaosBasis, ConstantFirstEntryAndOddIndicesAtOrigin) {
    const auto b = build_basis(3, 4);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 20; ++i) {
        const double p[] = {u(rng), u(rng), u(rng)};
        EXPECT_EQ(eval_basis(b, p)[0], 1.0);
    }
    const double origin[] = {0.0, 0.0, 0.0};
    const auto v = b.eval(origin);
    for (std::size_t k = 0; k < b.cardinality(); ++k) {
        const auto& a = b.multi_indices()[k];
        const bool odd = std::any_of(a.begin(), a.end(), [](std::size_t n) { return n % 2 == 1; });
        if (odd) {
            EXPECT_EQ(v[k], 0.0);
        }
    }
}

TEST(ChaosBasis, OneDimensionalEndpoint) {
    const auto b = build_basis(1, 6);
    const double one[] = {1.0};
    const auto v = b.eval(one);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_NEAR(v[n], std::sqrt(2.0 * n + 1.0), 1e-13);
}

TEST(ChaosBasis, OutOfRangeThrows) {
    const auto b = build_basis(2, 3);
    const double bad[] = {0.2, 1.5};
    EXPECT_THROW(b.eval(bad), InvalidArgument);
    const double short_input[] = {0.2};
    EXPECT_THROW(b.eval(short_input), InvalidArgument);
}

TEST(ChaosBasis, GramIsIdentityUnderQuadrature) {
    for (std::size_t d = 1; d <= 2; ++d) {
        for (std::size_t p = 0; p <= 6; ++p) {
            const auto g = quadrature_gram(build_basis(d, p));
            const double err = (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
            EXPECT_LT(err, 1e-10) << "dim " << d << " degree " << p;
        }
    }
}

TEST(ChaosBasis, MonteCarloGramWithinThreeStandardErrors) {
    const auto b = build_basis(2, 3);
    const std::size_t n = 100000, K = b.cardinality();
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::MatrixXd xi(n, 2);
    for (std::size_t i = 0; i < n; ++i) xi.row(i) << u(rng), u(rng);
    const Eigen::MatrixXd phi = b.eval_rows(xi);  // K x n
    for (std::size_t a = 0; a < K; ++a) {
        for (std::size_t c = 0; c < K; ++c) {
            const Eigen::ArrayXd prod = phi.row(a).array() * phi.row(c).array();
            const double mean = prod.mean();
            const double sd = std::sqrt((prod - mean).square().sum() / double(n - 1));
            const double target = a == c ? 1.0 : 0.0;
            EXPECT_LE(std::abs(mean - target), 3 * sd / std::sqrt(double(n)) + 1e-12) << a << "," << c;
        }
    }
}

TEST(ChaosBasis, ProjectionReproducesPolynomials) {
    // f(z0, z1) = 1 + 2 z0 - z1^2 + 0.5 z0^3 z1 has total degree 4.
    auto f = [](double z0, double z1) { return 1 + 2 * z0 - z1 * z1 + 0.5 * z0 * z0 * z0 * z1; };
    const auto b = build_basis(2, 4);
    const auto rule = nmtest::gauss_legendre_32();
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(b.cardinality());
    for (const auto& [z0, w0] : rule) {
        for (const auto& [z1, w1] : rule) {
            const double p[] = {z0, z1};
            coef += (w0 * w1 / 4) * f(z0, z1) * b.eval(p);
        }
    }
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 200; ++i) {
        const double p[] = {u(rng), u(rng)};
        EXPECT_NEAR(coef.dot(b.eval(p)), f(p[0], p[1]), 1e-9);
    }
}

TEST(ChaosBasis, RowEvaluationMatchesPointwise) {
    const auto b = build_basis(4, 3);
    const Eigen::MatrixXd xi = Eigen::MatrixXd::Random(9, 4);
    const Eigen::MatrixXd m = b.eval_rows(xi);
    for (int i = 0; i < 9; ++i) {
        const double p[] = {xi(i, 0), xi(i, 1), xi(i, 2), xi(i, 3)};
        EXPECT_LT((m.col(i) - b.eval(p)).norm(), 1e-14);
    }
}
