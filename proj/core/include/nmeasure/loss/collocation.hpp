#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/core/problem.hpp"
#include "nmeasure/measures/measure.hpp"

namespace nmeasure {

enum class SamplingStrategy { uniform_random, cartesian_product };

std::string to_string(SamplingStrategy s);
SamplingStrategy sampling_strategy_from_string(const std::string& s);

/// Training points for one loss evaluation plus the shared parameter batch.
struct CollocationBatch {
    PointSet interior;
    /// One point set per problem boundary condition, in problem order.
    std::vector<PointSet> boundary;
    PointSet initial;
    /// Raw parameter draws (n_xi x dim) and their standardized copy.
    Eigen::MatrixXd xi;
    Eigen::MatrixXd xi_hat;

    std::size_t boundary_point_count() const;
    /// Replaces the parameter batch; rows must lie inside the parameter bounds.
    void set_parameters(const ParameterSpace& space, Eigen::MatrixXd raw);
};

struct CollocationCounts {
    std::size_t n_x = 1;
    std::size_t n_t = 1;
    std::size_t n_boundary = 1;
    std::size_t n_initial = 1;
};

/// Space-time points (no parameters). cartesian_product draws n_x spatial and
/// n_t temporal coordinates i.i.d. uniform and takes their product;
/// uniform_random draws n_x * n_t i.i.d. points. Boundary points are uniform in
/// t at each boundary location, initial points uniform in x. For ODE domains
/// the spatial axis collapses: n_t interior times and a single initial point.
CollocationBatch sample_collocation(const RandomProblem& problem, const CollocationCounts& counts,
                                    SamplingStrategy strategy, std::uint64_t seed);

struct ResampleFlags {
    bool domain = false;
    bool params = false;
    bool operator==(const ResampleFlags&) const = default;
};

/// True exactly when iteration > 0 and iteration is a multiple of the period.
ResampleFlags resample_due(std::size_t iteration, std::size_t domain_period, std::size_t param_period);

}  // namespace nmeasure
