#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "nmeasure/metrics/ensemble.hpp"

namespace nmeasure {

/// Exact p-Wasserstein distance between two equal-size empirical measures on
/// the line: sort both and match order statistics,
///   (1/n sum_i |a_(i) - b_(i)|^p)^(1/p),  p in {1, 2}.
double empirical_wasserstein_1d(std::span<const double> a, std::span<const double> b, int p = 1);

/// Unequal sizes: shuffle each sample independently (seeded) and truncate
/// both to the smaller count before the exact computation.
double wasserstein_1d_truncated(std::span<const double> a, std::span<const double> b, int p,
                                std::uint64_t seed);

struct WassersteinPoint {
    double t = 0.0;
    double distance = 0.0;
};

/// Distance between the time-t marginals of two ensembles on the same grid,
/// pooled over space for PDE grids. Every t must be a grid time.
std::vector<WassersteinPoint> wasserstein_over_time(const EmpiricalEnsemble& model, const EmpiricalEnsemble& ref,
                                                    std::span<const double> t_slices, int p = 1,
                                                    std::uint64_t seed = 0);

/// Throws InvalidArgument unless both grids hold the same points in order.
void require_same_grid(const EmpiricalEnsemble& a, const EmpiricalEnsemble& b);

/// CSV "t,wasserstein_p1" (or _p2).
void write_wasserstein_csv(const std::filesystem::path& path, const std::vector<WassersteinPoint>& series,
                           int p = 1);

}  // namespace nmeasure
