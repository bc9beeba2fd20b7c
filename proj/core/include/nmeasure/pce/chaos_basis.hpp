#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace nmeasure {

/// sqrt(2n+1) P_n(z): Legendre polynomial normalized so that
/// int_{-1}^{1} phi_n(z)^2 dz/2 = 1. Throws when |z| > 1.
double legendre_orthonormal(std::size_t n, double z);

/// All phi_0..phi_max_degree at z via the three-term recurrence.
void legendre_orthonormal_all(std::size_t max_degree, double z, std::span<double> out);

using MultiIndex = std::vector<std::size_t>;

/// Total-degree Legendre chaos on [-1, 1]^dim, orthonormal for the uniform law.
///
/// Multi-indices are ordered by total degree; within one degree they are in
/// descending lexicographic order, so for dim = 2 the sequence starts
/// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2).
class ChaosBasis {
public:
    ChaosBasis(std::size_t dim, std::size_t max_total_degree);

    std::size_t dim() const { return dim_; }
    std::size_t max_total_degree() const { return degree_; }
    std::size_t cardinality() const { return indices_.size(); }
    const std::vector<MultiIndex>& multi_indices() const { return indices_; }

    /// phi_alpha(xi_hat) for every alpha; entry 0 is always 1.
    Eigen::VectorXd eval(std::span<const double> xi_hat) const;
    /// K x n matrix with column i = eval(row i of xi_hat).
    Eigen::MatrixXd eval_rows(const Eigen::MatrixXd& xi_hat) const;

private:
    void eval_into(std::span<const double> xi_hat, double* out, std::vector<double>& scratch) const;

    std::size_t dim_;
    std::size_t degree_;
    std::vector<MultiIndex> indices_;
};

ChaosBasis build_basis(std::size_t dim, std::size_t p);
Eigen::VectorXd eval_basis(const ChaosBasis& basis, std::span<const double> xi_hat);

/// C(dim + p, p).
std::size_t total_degree_cardinality(std::size_t dim, std::size_t p);

}  // namespace nmeasure
