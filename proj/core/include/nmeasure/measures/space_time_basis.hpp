#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/core/domain.hpp"
#include "nmeasure/core/fields.hpp"
#include "nmeasure/core/problem.hpp"

namespace nmeasure {

/// Chebyshev polynomials T_0..T_n at z with first and second derivatives.
struct ChebyshevValues {
    std::vector<double> t, dt, dtt;
};
ChebyshevValues chebyshev_all(std::size_t max_degree, double z);

/// Tensor Chebyshev basis psi_{m,n}(x, t) = T_m(x_hat) T_n(t_hat) on the
/// affinely rescaled problem domain. Flat index is m * (degree_t + 1) + n.
/// ODE domains carry only the time factor (degree_x is forced to 0).
class SpaceTimeBasis {
public:
    SpaceTimeBasis(const DomainSpec& domain, std::size_t degree_x, std::size_t degree_t);

    std::size_t degree_x() const { return degree_x_; }
    std::size_t degree_t() const { return degree_t_; }
    std::size_t size() const { return (degree_x_ + 1) * (degree_t_ + 1); }
    const DomainSpec& domain() const { return domain_; }

    /// M x n_points matrix of the requested channel of every basis function.
    Eigen::MatrixXd matrix(const std::vector<SpaceTime>& points, Channel channel) const;

    /// Value and derivatives of basis function `index` at one point.
    ModelEval eval(std::size_t index, double x, double t) const;

private:
    double x_hat(double x) const;
    double t_hat(double t) const;

    DomainSpec domain_;
    std::size_t degree_x_;
    std::size_t degree_t_;
};

}  // namespace nmeasure
