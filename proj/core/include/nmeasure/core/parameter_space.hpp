#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace nmeasure {

/// One independent uniform random parameter U(lower, upper).
struct UniformParameter {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;

    double width() const { return upper - lower; }
};

/// Product of independent uniform laws; the reference measure of a random problem.
///
/// Immutable after construction. Networks and chaos bases never see raw
/// parameters, only the standardized values in [-1, 1]^dim.
class ParameterSpace {
public:
    explicit ParameterSpace(std::vector<UniformParameter> entries);

    std::size_t dimension() const { return entries_.size(); }
    const std::vector<UniformParameter>& entries() const { return entries_; }
    const UniformParameter& operator[](std::size_t i) const { return entries_[i]; }

    /// n x dim matrix of i.i.d. draws, deterministic in seed.
    Eigen::MatrixXd sample(std::size_t n, std::uint64_t seed) const;

    /// Affine map of each coordinate onto [-1, 1]. Throws on out-of-bounds input.
    std::vector<double> standardize(std::span<const double> xi) const;
    std::vector<double> unstandardize(std::span<const double> xi_hat) const;

    /// Row-wise standardization of a sample matrix.
    Eigen::MatrixXd standardize_rows(const Eigen::MatrixXd& xi) const;

    bool contains(std::span<const double> xi) const;

private:
    std::vector<UniformParameter> entries_;
};

Eigen::MatrixXd sample_parameters(const ParameterSpace& space, std::size_t n, std::uint64_t seed);
std::vector<double> standardize_parameters(const ParameterSpace& space, std::span<const double> xi);

}  // namespace nmeasure
