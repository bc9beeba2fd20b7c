#pragma once

#include <string>
#include <vector>

#include "nmeasure/core/problem.hpp"

namespace nmeasure {

// ---- bistable ODE: du/dt = r (u-1)(2-u)(u-3), u(0) = u0, t in [0, 8]
// parameters (u0, r) ~ U(0, 4) x U(0.8, 1.2)

/// Vector field with stable equilibria 1 and 3 and unstable equilibrium 2.
double bistable_rhs(double u, double r);
double bistable_rhs_du(double u, double r);
RandomProblem make_bistable_problem();

// ---- diffusion: u_t - (a/k^2) u_xx = 0 on [0, pi] x [0, 1], u(0,x) = sin(kx),
// u(t,0) = 0, u(t,pi) = exp(-a t) sin(pi k); parameters (a, k) ~ U(1,3)^2

double diffusion_exact(double a, double k, double x, double t);
/// Exact solution with u_t, u_x and u_xx.
ModelEval diffusion_exact_jet(double a, double k, double x, double t);
RandomProblem make_diffusion_problem();

// ---- reaction-diffusion: u_t - D u_xx + g(x) u^3 = f(x) on [-1, 1] x [0, 4],
// u(0,x) = 0.5 cos^2(pi x), u(t, +-1) = 0.5, D = 0.01;
// parameters (r1, r2, k1, k2) ~ U(0.5,1) x U(3,4) x U(0.2,0.8) x U(1,4)

inline constexpr double kReactionDiffusivity = 0.01;
double reaction_g(double x, double r1, double r2);
double forcing_f(double x, double k1, double k2);
double reaction_initial(double x);
RandomProblem make_reaction_diffusion_problem();

/// Registered problem names: "bistable", "diffusion", "reaction_diffusion".
std::vector<std::string> problem_names();
/// Throws InvalidArgument listing the registered names when unknown.
RandomProblem make_problem(const std::string& name);

}  // namespace nmeasure
