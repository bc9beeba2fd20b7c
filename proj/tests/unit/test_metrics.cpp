#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"
#include "nmeasure/metrics/ensemble.hpp"
#include "nmeasure/metrics/statistics.hpp"
#include "nmeasure/metrics/wasserstein.hpp"
#include "nmeasure/problems/problems.hpp"
#include "test_support.hpp"

using namespace nmeasure;

namespace {

// Minimum transport cost over every coupling of two uniform n-point measures.
// For equal weights the optimum sits on a permutation.
double brute_force_wasserstein(std::vector<double> a, const std::vector<double>& b, int p) {
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double cost = 0;
        for (std::size_t i = 0; i < a.size(); ++i) cost += std::pow(std::abs(a[i] - b[perm[i]]), p);
        best = std::min(best, cost / static_cast<double>(a.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::pow(best, 1.0 / p);
}

std::vector<double> uniform_sample(std::size_t n, double lo, double hi, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

EmpiricalEnsemble small_ensemble(std::size_t samples, unsigned seed) {
    EmpiricalEnsemble e;
    e.grid = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 1.0}, {0.5, 1.0}};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    e.values.resize(static_cast<Eigen::Index>(samples), 4);
    for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) e.values(i, j) = d(rng) + static_cast<double>(j);
    }
    return e;
}

}  // namespace

TEST(Wasserstein, Examples) {
    const std::vector<double> a{0.0, 1.0, 2.0}, b{1.0, 2.0, 3.0};
    EXPECT_DOUBLE_EQ(empirical_wasserstein_1d(a, b), 1.0);
    EXPECT_DOUBLE_EQ(empirical_wasserstein_1d(a, a), 0.0);
    // Order of the input does not matter.
    EXPECT_DOUBLE_EQ(empirical_wasserstein_1d(std::vector<double>{2, 0, 1}, std::vector<double>{3, 1, 2}), 1.0);
    EXPECT_DOUBLE_EQ(empirical_wasserstein_1d(std::vector<double>{0, 0}, std::vector<double>{0, 2}), 1.0);
    EXPECT_DOUBLE_EQ(empirical_wasserstein_1d(std::vector<double>{0, 0}, std::vector<double>{0, 2}, 2), std::sqrt(2.0));
    EXPECT_THROW(empirical_wasserstein_1d(a, std::vector<double>{1.0}), InvalidArgument);
    EXPECT_THROW(empirical_wasserstein_1d(std::vector<double>{}, std::vector<double>{}), InvalidArgument);
    EXPECT_THROW(empirical_wasserstein_1d(a, b, 3), InvalidArgument);
    EXPECT_THROW(empirical_wasserstein_1d(a, std::vector<double>{1, NAN, 2}), InvalidArgument);
}

TEST(Wasserstein, MatchesBruteForceOnSmallSamples) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> d;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        std::vector<double> a(n), b(n);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = 2 * d(rng) + 0.5;
        for (int p : {1, 2}) {
            EXPECT_NEAR(empirical_wasserstein_1d(a, b, p), brute_force_wasserstein(a, b, p), 1e-14)
                << "n=" << n << " p=" << p;
        }
    }
}

TEST(Wasserstein, MetricAxioms) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> d;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> a(8), b(8), c(8);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng) * 3;
        for (auto& x : c) x = d(rng) - 1;
        const double ab = empirical_wasserstein_1d(a, b), ba = empirical_wasserstein_1d(b, a);
        EXPECT_GE(ab, 0.0);
        EXPECT_NEAR(ab, ba, 1e-12);
        EXPECT_LE(ab, empirical_wasserstein_1d(a, c) + empirical_wasserstein_1d(c, b) + 1e-12);
    }
}

TEST(Wasserstein, ShiftEqualsDistance) {
    auto a = uniform_sample(500, -1, 1, 1);
    auto b = a;
    for (auto& x : b) x += 0.37;
    EXPECT_NEAR(empirical_wasserstein_1d(a, b), 0.37, 1e-14);
    EXPECT_NEAR(empirical_wasserstein_1d(a, b, 2), 0.37, 1e-14);
}

TEST(Wasserstein, ShiftEquivarianceAndIdentity) {
    const auto a = uniform_sample(300, -1, 2, 5);
    const auto b = uniform_sample(300, 0, 1, 6);
    auto as = a, bs = b;
    for (auto& x : as) x += 2.75;
    for (auto& x : bs) x += 2.75;
    EXPECT_NEAR(empirical_wasserstein_1d(as, bs), empirical_wasserstein_1d(a, b), 1e-12);
    // Zero exactly when the sorted samples agree.
    auto shuffled = a;
    std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(1));
    EXPECT_EQ(empirical_wasserstein_1d(a, shuffled), 0.0);
    auto moved = shuffled;
    moved[17] += 1e-9;
    EXPECT_GT(empirical_wasserstein_1d(a, moved), 0.0);
}

TEST(Wasserstein, IndependentUniformSamplesAreClose) {
    const auto a = uniform_sample(10000, 0, 4, 11);
    const auto b = uniform_sample(10000, 0, 4, 12);
    EXPECT_LE(empirical_wasserstein_1d(a, b), 0.05);
}

TEST(Wasserstein, UnequalSizesTruncateDeterministically) {
    const auto a = uniform_sample(300, 0, 1, 1);
    const auto b = uniform_sample(200, 0, 1, 2);
    const double w = wasserstein_1d_truncated(a, b, 1, 5);
    EXPECT_EQ(w, wasserstein_1d_truncated(a, b, 1, 5));
    EXPECT_LT(w, 0.2);
    // Equal sizes reduce to the exact computation.
    EXPECT_DOUBLE_EQ(wasserstein_1d_truncated(b, b, 1, 3), 0.0);
    // A constant sample against a shifted constant is exact whatever subset is kept.
    EXPECT_DOUBLE_EQ(wasserstein_1d_truncated(std::vector<double>(7, 1.0), std::vector<double>(3, 2.5), 1, 0), 1.5);
}

TEST(Wasserstein, OverTime) {
    const auto ref = small_ensemble(50, 1);
    const std::vector<double> ts{0.0, 1.0};
    for (const auto& w : wasserstein_over_time(ref, ref, ts)) EXPECT_EQ(w.distance, 0.0);

    EmpiricalEnsemble shifted = ref;
    shifted.values.array() += 0.25;
    const auto series = wasserstein_over_time(shifted, ref, ts);
    ASSERT_EQ(series.size(), 2u);
    EXPECT_EQ(series[0].t, 0.0);
    EXPECT_EQ(series[1].t, 1.0);
    for (const auto& w : series) EXPECT_NEAR(w.distance, 0.25, 1e-14);

    // Pooled over space: at t = 1 the columns are {2, 3} + noise.
    const auto pooled = ref.pooled_at_time(1.0);
    ASSERT_EQ(pooled.size(), 100u);

    EXPECT_THROW(wasserstein_over_time(ref, ref, std::vector<double>{0.5}), InvalidArgument);
    EmpiricalEnsemble other = ref;
    other.grid[1].x = 0.75;
    EXPECT_THROW(wasserstein_over_time(other, ref, ts), InvalidArgument);
    EXPECT_THROW(require_same_grid(other, ref), InvalidArgument);
    EXPECT_NO_THROW(require_same_grid(ref, shifted));
}

TEST(Wasserstein, CsvLayout) {
    nmtest::TempDir dir("w");
    write_wasserstein_csv(dir.path() / "w.csv", {{0.0, 0.5}, {1.0, 0.25}});
    const auto t = read_csv(dir.path() / "w.csv");
    EXPECT_EQ(t.header, (std::vector<std::string>{"t", "wasserstein_p1"}));
    EXPECT_EQ(t.rows, (std::vector<std::vector<double>>{{0.0, 0.5}, {1.0, 0.25}}));
    write_wasserstein_csv(dir.path() / "w2.csv", {{0.0, 0.5}}, 2);
    EXPECT_EQ(read_csv(dir.path() / "w2.csv").header[1], "wasserstein_p2");
}

TEST(Statistics, MomentsMatchDirectComputation) {
    const auto e = small_ensemble(40, 3);
    const auto m = ensemble_moments(e);
    ASSERT_EQ(m.mean.size(), 4);
    for (Eigen::Index j = 0; j < 4; ++j) {
        const Eigen::VectorXd col = e.values.col(j);
        const double mean = col.mean();
        const double var = (col.array() - mean).square().sum() / 39.0;
        EXPECT_NEAR(m.mean[j], mean, 1e-14);
        EXPECT_NEAR(m.std[j], std::sqrt(var), 1e-14);
    }
    EXPECT_THROW(ensemble_moments(small_ensemble(1, 3)), InvalidArgument);
    auto bad = small_ensemble(3, 3);
    bad.values(1, 1) = NAN;
    EXPECT_THROW(ensemble_moments(bad), NonFiniteValue);
}

TEST(Statistics, MomentsCsvRoundTrip) {
    nmtest::TempDir dir("moments");
    const auto m = ensemble_moments(small_ensemble(30, 9));
    write_moments_csv(dir.path() / "m.csv", m);
    const auto r = read_moments_csv(dir.path() / "m.csv");
    EXPECT_EQ(r.mean, m.mean);
    EXPECT_EQ(r.std, m.std);
    ASSERT_EQ(r.grid.size(), m.grid.size());
    for (std::size_t j = 0; j < r.grid.size(); ++j) EXPECT_EQ(r.grid[j].x, m.grid[j].x);
}

TEST(Statistics, HistogramExamples) {
    const std::vector<double> v{0.0, 0.1, 0.5, 0.99, 1.0, -3.0, 7.0};
    const auto h = histogram(v, 2, 0.0, 1.0);
    EXPECT_EQ(h.edges, (std::vector<double>{0.0, 0.5, 1.0}));
    // -3 joins the first bin, 7 and the right edge join the last.
    EXPECT_EQ(h.counts, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(h.total(), v.size());
    const auto one = histogram(std::vector<double>{2.0, 2.0}, 5, 2.0, 2.0);
    EXPECT_EQ(one.counts.size(), 1u);
    EXPECT_EQ(one.total(), 2u);
    const auto self = histogram(v, 10);
    EXPECT_EQ(self.edges.front(), -3.0);
    EXPECT_EQ(self.edges.back(), 7.0);
    EXPECT_EQ(self.total(), v.size());
    EXPECT_THROW(histogram(v, 0, 0, 1), InvalidArgument);
    EXPECT_THROW(histogram(v, 3, 1, 0), InvalidArgument);
    EXPECT_THROW(histogram(std::vector<double>{NAN}, 3, 0, 1), InvalidArgument);
}

TEST(Statistics, HistogramCountsFollowTheMultinomialLaw) {
    const std::size_t n = 20000, bins = 10;
    const auto v = uniform_sample(n, -2, 3, 21);
    const auto h = histogram(v, bins, -2, 3);
    const double p = 1.0 / bins;
    const double sd = std::sqrt(n * p * (1 - p));
    for (auto c : h.counts) EXPECT_NEAR(static_cast<double>(c), n * p, 4 * sd);
}

TEST(Statistics, PooledRangeHeatmapAndErrors) {
    const auto [lo, hi] = pooled_range(std::vector<double>{1, 4}, std::vector<double>{-2, 3});
    EXPECT_EQ(lo, -2.0);
    EXPECT_EQ(hi, 4.0);
    EXPECT_EQ(pooled_range(std::vector<double>{}, std::vector<double>{5}).first, 5.0);
    EXPECT_THROW(pooled_range(std::vector<double>{}, std::vector<double>{}), InvalidArgument);

    Eigen::VectorXd a(3), b(3);
    a << 1, 2, 3;
    b << 1, 4, 0;
    EXPECT_EQ(error_heatmap(a, b), Eigen::Vector3d(0, 2, 3));
    EXPECT_DOUBLE_EQ(relative_l2_error(a, b), std::sqrt(13.0 / 17.0));
    EXPECT_THROW(relative_l2_error(a, Eigen::VectorXd::Zero(3)), InvalidArgument);
    EXPECT_THROW(error_heatmap(a, Eigen::VectorXd::Zero(2)), InvalidArgument);

    const std::vector<double> q{4, 1, 3, 2};
    EXPECT_DOUBLE_EQ(percentile(q, 0), 1.0);
    EXPECT_DOUBLE_EQ(percentile(q, 50), 2.5);
    EXPECT_DOUBLE_EQ(percentile(q, 100), 4.0);
    EXPECT_DOUBLE_EQ(percentile(q, 95), 3.85);
    EXPECT_THROW(percentile(std::vector<double>{}, 50), InvalidArgument);
    EXPECT_THROW(percentile(q, 101), InvalidArgument);

    nmtest::TempDir dir("heat");
    const std::vector<SpaceTime> grid{{0, 0}, {1, 0}, {0, 1}};
    write_heatmap_csv(dir.path() / "h.csv", grid, error_heatmap(a, b));
    const auto t = read_csv(dir.path() / "h.csv");
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "t", "abs_error"}));
    EXPECT_EQ(t.rows[2], (std::vector<double>{0, 1, 3}));
    EXPECT_THROW(write_heatmap_csv(dir.path() / "g.csv", grid, Eigen::VectorXd::Zero(2)), InvalidArgument);
}

TEST(Ensemble, CsvRoundTripIsExact) {
    nmtest::TempDir dir("ens");
    auto e = small_ensemble(7, 5);
    e.values(0, 0) = 0.1 + 0.2;
    e.values(1, 2) = -1e-300;
    write_ensemble_csv(dir.path() / "e.csv", e);
    const auto r = read_ensemble_csv(dir.path() / "e.csv");
    EXPECT_EQ(r.values, e.values);
    ASSERT_EQ(r.grid.size(), e.grid.size());
    for (std::size_t j = 0; j < r.grid.size(); ++j) {
        EXPECT_EQ(r.grid[j].x, e.grid[j].x);
        EXPECT_EQ(r.grid[j].t, e.grid[j].t);
    }
    const std::string text = nmtest::read_file(dir.path() / "e.csv");
    EXPECT_EQ(text.substr(0, text.find('\n')), "xi_index,x,t,u");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 7 * 4);
}

TEST(Ensemble, MalformedFilesAreRejected) {
    nmtest::TempDir dir("bad");
    atomic_write(dir.path() / "hdr.csv", "i,x,t,u\n0,0,0,1\n");
    EXPECT_THROW(read_ensemble_csv(dir.path() / "hdr.csv"), IoError);
    atomic_write(dir.path() / "num.csv", "xi_index,x,t,u\n0,0,0,abc\n");
    EXPECT_THROW(read_ensemble_csv(dir.path() / "num.csv"), IoError);
    atomic_write(dir.path() / "grid.csv", "xi_index,x,t,u\n0,0,0,1\n0,0,1,1\n1,0,0,1\n1,0,2,1\n");
    EXPECT_THROW(read_ensemble_csv(dir.path() / "grid.csv"), IoError);
    atomic_write(dir.path() / "count.csv", "xi_index,x,t,u\n0,0,0,1\n0,0,1,1\n1,0,0,1\n");
    EXPECT_THROW(read_ensemble_csv(dir.path() / "count.csv"), IoError);
    EXPECT_THROW(read_ensemble_csv(dir.path() / "absent.csv"), IoError);
    EmpiricalEnsemble e = small_ensemble(2, 1);
    e.grid.pop_back();
    EXPECT_THROW(e.validate(), InvalidArgument);
}

TEST(Ensemble, UniformGridAndTimes) {
    const auto pde = make_diffusion_problem();
    const auto g = uniform_grid(pde.domain, 3, 2);
    ASSERT_EQ(g.size(), 6u);
    // Time index fastest.
    EXPECT_EQ(g[0].t, 0.0);
    EXPECT_EQ(g[1].t, 1.0);
    EXPECT_EQ(g[1].x, 0.0);
    EXPECT_NEAR(g[2].x, std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(g[5].x, std::numbers::pi, 1e-15);
    const auto ode = uniform_grid(make_bistable_problem().domain, 99, 5);
    ASSERT_EQ(ode.size(), 5u);
    EXPECT_EQ(ode[4].t, 8.0);
    for (const auto& p : ode) EXPECT_EQ(p.x, 0.0);
    EmpiricalEnsemble e;
    e.grid = g;
    EXPECT_EQ(e.times(), (std::vector<double>{0.0, 1.0}));
    EXPECT_EQ(e.columns_at_time(1.0), (std::vector<std::size_t>{1, 3, 5}));
}

TEST(Csv, FormatDoubleRoundTrips) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = d(rng) * std::pow(10.0, i % 40 - 20);
        EXPECT_EQ(parse_double(format_double(v)), v);
    }
    EXPECT_THROW(parse_double("1.5x"), IoError);
    EXPECT_THROW(parse_double(""), IoError);
}
