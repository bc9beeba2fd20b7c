#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/metrics/ensemble.hpp"

namespace nmeasure {

/// Backward-Euler trajectory of the bistable ODE sampled at t_grid.
///
/// Each interval between grid times is split into equal steps no longer than
/// max_step; every step solves its implicit equation by Newton iteration to
/// |delta| <= 1e-12 (at most 50 iterations, ConvergenceError otherwise).
std::vector<double> solve_bistable_reference(double u0, double r, std::span<const double> t_grid,
                                             double max_step = 1e-3);

/// u_t = D u_xx - g(x) u^3 + f(x) on [x0, x1] x [0, T] with Dirichlet data.
struct ReactionDiffusionSetup {
    double diffusivity = 0.01;
    double x0 = -1.0;
    double x1 = 1.0;
    double t_end = 4.0;
    double left = 0.5;
    double right = 0.5;
    std::function<double(double)> reaction;  // g
    std::function<double(double)> forcing;   // f
    std::function<double(double)> initial;   // u(0, x)
};

/// Field on a uniform (nt + 1) x (nx + 1) node grid; values(n, i) = u(t_n, x_i).
struct SpaceTimeField {
    std::vector<double> xs;
    std::vector<double> ts;
    Eigen::MatrixXd values;

    /// Bilinear interpolation inside the grid.
    double interpolate(double x, double t) const;
};

/// Method of lines: second-order central differences in space and
/// Crank-Nicolson in time, Newton on the cubic term (tolerance 1e-10,
/// tridiagonal Jacobian). Requires nx, nt >= 16.
SpaceTimeField solve_reaction_diffusion(const ReactionDiffusionSetup& setup, std::size_t nx, std::size_t nt);

/// The bundled reaction-diffusion problem for one parameter draw.
SpaceTimeField solve_reaction_diffusion_reference(double r1, double r2, double k1, double k2, std::size_t nx,
                                                  std::size_t nt);

/// Default reaction-diffusion solver resolution for reference ensembles.
inline constexpr std::size_t kReferenceNx = 200;
inline constexpr std::size_t kReferenceNt = 400;

/// Ground-truth ensemble of a registered problem: one row per parameter draw
/// (raw values in xi_batch), one column per grid point. Uses the implicit
/// solver for "bistable", the exact solution for "diffusion" and the
/// Crank-Nicolson solver for "reaction_diffusion".
EmpiricalEnsemble reference_ensemble(const std::string& problem, const Eigen::MatrixXd& xi_batch,
                                     const std::vector<SpaceTime>& grid);

}  // namespace nmeasure
