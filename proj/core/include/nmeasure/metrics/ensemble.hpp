#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/core/problem.hpp"

namespace nmeasure {

/// Sample paths of a solution law: values(i, j) is sample i at grid point j.
struct EmpiricalEnsemble {
    Eigen::MatrixXd values;
    std::vector<SpaceTime> grid;
    std::string meta;

    std::size_t samples() const { return static_cast<std::size_t>(values.rows()); }
    std::size_t points() const { return grid.size(); }

    /// Throws when entries are non-finite or the grid does not match the columns.
    void validate() const;
    /// Distinct grid times in ascending order.
    std::vector<double> times() const;
    /// Column indices whose time equals t (to 1e-12 relative).
    std::vector<std::size_t> columns_at_time(double t) const;
    /// All sample values at time t pooled over space.
    std::vector<double> pooled_at_time(double t) const;
};

/// CSV with header "xi_index,x,t,u", one record per (sample, grid point),
/// samples outermost, values printed with 17 significant digits.
void write_ensemble_csv(const std::filesystem::path& path, const EmpiricalEnsemble& e);
EmpiricalEnsemble read_ensemble_csv(const std::filesystem::path& path);

/// Uniform tensor grid: nx points over the spatial interval (ignored for ODE
/// domains) times nt points over the time interval, time index fastest.
std::vector<SpaceTime> uniform_grid(const DomainSpec& domain, std::size_t nx, std::size_t nt);

}  // namespace nmeasure
