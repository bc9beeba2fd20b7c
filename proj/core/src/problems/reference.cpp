#include "nmeasure/problems/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nmeasure/core/error.hpp"
#include "nmeasure/problems/problems.hpp"

namespace nmeasure {

namespace {

double backward_euler_step(double u, double r, double h) {
    double v = u;
    for (int it = 0; it < 50; ++it) {
        const double g = v - u - h * bistable_rhs(v, r);
        const double dg = 1.0 - h * bistable_rhs_du(v, r);
        const double delta = g / dg;
        v -= delta;
        if (std::abs(delta) <= 1e-12) return v;
    }
    std::ostringstream msg;
    msg << "backward Euler Newton did not converge (u=" << u << ", r=" << r << ", h=" << h << ")";
    throw ConvergenceError(msg.str());
}

// Solves a tridiagonal system in place: sub (a), diag (b), super (c), rhs (d).
void thomas(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c, std::vector<double>& d) {
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    d[n - 1] /= b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

}  // namespace

std::vector<double> solve_bistable_reference(double u0, double r, std::span<const double> t_grid, double max_step) {
    if (t_grid.empty()) throw InvalidArgument("solve_bistable_reference: empty time grid");
    if (!(max_step > 0.0)) throw InvalidArgument("solve_bistable_reference: max_step must be positive");
    if (t_grid[0] < 0.0) throw InvalidArgument("solve_bistable_reference: time grid must start at or after 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= t_grid[i - 1])) throw InvalidArgument("solve_bistable_reference: time grid must ascend");
    }
    std::vector<double> out(t_grid.size());
    double u = u0;
    double t = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t;
        if (span > 0.0) {
            const auto steps = static_cast<std::size_t>(std::ceil(span / max_step - 1e-9));
            const double h = span / static_cast<double>(steps);
            for (std::size_t s = 0; s < steps; ++s) u = backward_euler_step(u, r, h);
        }
        t = t_grid[i];
        out[i] = u;
    }
    return out;
}

double SpaceTimeField::interpolate(double x, double t) const {
    auto locate = [](const std::vector<double>& axis, double v, const char* name) {
        const double lo = axis.front();
        const double hi = axis.back();
        const double slack = 1e-12 * (hi - lo);
        if (v < lo - slack || v > hi + slack) {
            std::ostringstream msg;
            msg << "SpaceTimeField: " << name << "=" << v << " outside [" << lo << ", " << hi << "]";
            throw InvalidArgument(msg.str());
        }
        const double h = (hi - lo) / static_cast<double>(axis.size() - 1);
        double s = (std::clamp(v, lo, hi) - lo) / h;
        auto i = static_cast<std::size_t>(std::floor(s));
        if (i >= axis.size() - 1) i = axis.size() - 2;
        return std::pair<std::size_t, double>{i, s - static_cast<double>(i)};
    };
    const auto [ix, fx] = locate(xs, x, "x");
    const auto [it, ft] = locate(ts, t, "t");
    const auto r0 = static_cast<Eigen::Index>(it);
    const auto c0 = static_cast<Eigen::Index>(ix);
    return (1 - ft) * ((1 - fx) * values(r0, c0) + fx * values(r0, c0 + 1)) +
           ft * ((1 - fx) * values(r0 + 1, c0) + fx * values(r0 + 1, c0 + 1));
}

SpaceTimeField solve_reaction_diffusion(const ReactionDiffusionSetup& setup, std::size_t nx, std::size_t nt) {
    if (nx < 16 || nt < 16) throw InvalidArgument("solve_reaction_diffusion: nx and nt must be >= 16");
    if (!setup.reaction || !setup.forcing || !setup.initial) {
        throw InvalidArgument("solve_reaction_diffusion: reaction, forcing and initial functions are required");
    }
    const double h = (setup.x1 - setup.x0) / static_cast<double>(nx);
    const double dt = setup.t_end / static_cast<double>(nt);
    SpaceTimeField field;
    field.xs.resize(nx + 1);
    field.ts.resize(nt + 1);
    for (std::size_t i = 0; i <= nx; ++i) field.xs[i] = setup.x0 + h * static_cast<double>(i);
    field.xs.back() = setup.x1;
    for (std::size_t n = 0; n <= nt; ++n) field.ts[n] = dt * static_cast<double>(n);
    field.ts.back() = setup.t_end;
    field.values.resize(static_cast<Eigen::Index>(nt + 1), static_cast<Eigen::Index>(nx + 1));

    const std::size_t m = nx - 1;  // interior unknowns
    std::vector<double> g(m), f(m), u(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = field.xs[i + 1];
        g[i] = setup.reaction(x);
        f[i] = setup.forcing(x);
        u[i] = setup.initial(x);
    }
    for (std::size_t i = 0; i <= nx; ++i) field.values(0, static_cast<Eigen::Index>(i)) = setup.initial(field.xs[i]);

    const double lam = setup.diffusivity / (h * h);
    auto rhs = [&](const std::vector<double>& v, std::size_t i) {
        const double left = i == 0 ? setup.left : v[i - 1];
        const double right = i + 1 == m ? setup.right : v[i + 1];
        return lam * (left - 2.0 * v[i] + right) - g[i] * v[i] * v[i] * v[i] + f[i];
    };

    std::vector<double> explicit_part(m), v(m), a(m), b(m), c(m), d(m);
    for (std::size_t n = 1; n <= nt; ++n) {
        for (std::size_t i = 0; i < m; ++i) explicit_part[i] = u[i] + 0.5 * dt * rhs(u, i);
        v = u;
        bool converged = false;
        for (int iter = 0; iter < 50 && !converged; ++iter) {
            for (std::size_t i = 0; i < m; ++i) {
                d[i] = -(v[i] - 0.5 * dt * rhs(v, i) - explicit_part[i]);
                a[i] = -0.5 * dt * lam;
                c[i] = -0.5 * dt * lam;
                b[i] = 1.0 + 0.5 * dt * (2.0 * lam + 3.0 * g[i] * v[i] * v[i]);
            }
            thomas(a, b, c, d);
            double max_delta = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                v[i] += d[i];
                max_delta = std::max(max_delta, std::abs(d[i]));
            }
            if (!std::isfinite(max_delta)) break;
            converged = max_delta <= 1e-10;
        }
        if (!converged) {
            std::ostringstream msg;
            msg << "Crank-Nicolson Newton did not converge at t=" << field.ts[n]
                << "; try a smaller time step (larger nt than " << nt << ")";
            throw ConvergenceError(msg.str());
        }
        u = v;
        const auto row = static_cast<Eigen::Index>(n);
        field.values(row, 0) = setup.left;
        field.values(row, static_cast<Eigen::Index>(nx)) = setup.right;
        for (std::size_t i = 0; i < m; ++i) field.values(row, static_cast<Eigen::Index>(i + 1)) = u[i];
    }
    return field;
}

SpaceTimeField solve_reaction_diffusion_reference(double r1, double r2, double k1, double k2, std::size_t nx,
                                                  std::size_t nt) {
    ReactionDiffusionSetup setup;
    setup.diffusivity = kReactionDiffusivity;
    setup.reaction = [=](double x) { return reaction_g(x, r1, r2); };
    setup.forcing = [=](double x) { return forcing_f(x, k1, k2); };
    setup.initial = reaction_initial;
    return solve_reaction_diffusion(setup, nx, nt);
}

EmpiricalEnsemble reference_ensemble(const std::string& problem, const Eigen::MatrixXd& xi_batch,
                                     const std::vector<SpaceTime>& grid) {
    const RandomProblem p = make_problem(problem);
    if (static_cast<std::size_t>(xi_batch.cols()) != p.params.dimension()) {
        throw InvalidArgument("reference_ensemble: parameter batch has the wrong dimension for " + problem);
    }
    if (grid.empty() || xi_batch.rows() == 0) throw InvalidArgument("reference_ensemble: empty grid or batch");
    for (const auto& pt : grid) p.domain.check_contains(pt.x, pt.t);

    EmpiricalEnsemble e;
    e.grid = grid;
    e.values.resize(xi_batch.rows(), static_cast<Eigen::Index>(grid.size()));
    e.meta = problem;

    if (problem == "bistable") {
        // Solve once per draw on the sorted distinct grid times.
        std::vector<double> times;
        for (const auto& pt : grid) times.push_back(pt.t);
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        for (Eigen::Index i = 0; i < xi_batch.rows(); ++i) {
            const auto traj = solve_bistable_reference(xi_batch(i, 0), xi_batch(i, 1), times);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const auto pos = std::lower_bound(times.begin(), times.end(), grid[j].t) - times.begin();
                e.values(i, static_cast<Eigen::Index>(j)) = traj[static_cast<std::size_t>(pos)];
            }
        }
    } else if (problem == "diffusion") {
        for (Eigen::Index i = 0; i < xi_batch.rows(); ++i) {
            for (std::size_t j = 0; j < grid.size(); ++j) {
                e.values(i, static_cast<Eigen::Index>(j)) =
                    diffusion_exact(xi_batch(i, 0), xi_batch(i, 1), grid[j].x, grid[j].t);
            }
        }
    } else {
        for (Eigen::Index i = 0; i < xi_batch.rows(); ++i) {
            const auto field = solve_reaction_diffusion_reference(xi_batch(i, 0), xi_batch(i, 1), xi_batch(i, 2),
                                                                  xi_batch(i, 3), kReferenceNx, kReferenceNt);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                e.values(i, static_cast<Eigen::Index>(j)) = field.interpolate(grid[j].x, grid[j].t);
            }
        }
    }
    return e;
}

}  // namespace nmeasure
