#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/metrics/ensemble.hpp"

namespace nmeasure {

/// Per-grid-point sample mean and unbiased (n - 1) standard deviation.
struct MomentField {
    std::vector<SpaceTime> grid;
    Eigen::VectorXd mean;
    Eigen::VectorXd std;
};

MomentField ensemble_moments(const EmpiricalEnsemble& e);

/// CSV "x,t,mean,std".
void write_moments_csv(const std::filesystem::path& path, const MomentField& m);
MomentField read_moments_csv(const std::filesystem::path& path);

struct Histogram {
    std::vector<double> edges;  // n_bins + 1, ascending
    std::vector<std::size_t> counts;

    std::size_t total() const;
};

/// Equal-width bins over [lo, hi]; values outside the range land in the edge
/// bins, so counts always sum to the sample count. lo == hi gives one bin.
Histogram histogram(std::span<const double> samples, std::size_t n_bins, double lo, double hi);
/// Range taken from the samples themselves.
Histogram histogram(std::span<const double> samples, std::size_t n_bins);

/// [min, max] over the union of both samples.
std::pair<double, double> pooled_range(std::span<const double> a, std::span<const double> b);

/// Pointwise |a - b|.
Eigen::VectorXd error_heatmap(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// CSV "x,t,abs_error".
void write_heatmap_csv(const std::filesystem::path& path, const std::vector<SpaceTime>& grid,
                       const Eigen::VectorXd& error);

/// ||a - b||_2 / ||b||_2 over grid points.
double relative_l2_error(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Linear-interpolation percentile, q in [0, 100].
double percentile(std::span<const double> values, double q);

}  // namespace nmeasure
