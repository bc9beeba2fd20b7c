#include "nmeasure/problems/problems.hpp"

#include <cmath>
#include <numbers>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

namespace {

constexpr double kPi = std::numbers::pi;

Dual dirichlet(const FieldDuals& u, double target) { return u.u - Dual(target); }

}  // namespace

double bistable_rhs(double u, double r) { return r * (u - 1.0) * (2.0 - u) * (u - 3.0); }

double bistable_rhs_du(double u, double r) {
    // d/du of (u-1)(2-u)(u-3) = -(3u^2 - 12u + 11)
    return -r * (3.0 * u * u - 12.0 * u + 11.0);
}

RandomProblem make_bistable_problem() {
    ParameterSpace params({{"u0", 0.0, 4.0}, {"r", 0.8, 1.2}});
    ResidualTerm interior{
        [](const FieldDuals& u, double, double, std::span<const double> xi) {
            const double r = xi[1];
            return u.u_t - r * ((u.u - Dual(1.0)) * (Dual(2.0) - u.u) * (u.u - Dual(3.0)));
        },
        Channels::ode()};
    ResidualTerm initial{[](const FieldDuals& u, double, double, std::span<const double> xi) {
                             return dirichlet(u, xi[0]);
                         },
                         Channels::value_only()};
    return RandomProblem{"bistable", DomainSpec::ode({0.0, 8.0}), std::move(params), std::move(interior), {},
                         std::move(initial), std::nullopt};
}

double diffusion_exact(double a, double k, double x, double t) { return std::exp(-a * t) * std::sin(k * x); }

ModelEval diffusion_exact_jet(double a, double k, double x, double t) {
    const double decay = std::exp(-a * t);
    const double s = std::sin(k * x);
    const double c = std::cos(k * x);
    ModelEval m;
    m.u = decay * s;
    m.u_t = -a * decay * s;
    m.u_x = k * decay * c;
    m.u_xx = -k * k * decay * s;
    return m;
}

RandomProblem make_diffusion_problem() {
    ParameterSpace params({{"a", 1.0, 3.0}, {"k", 1.0, 3.0}});
    ResidualTerm interior{
        [](const FieldDuals& u, double, double, std::span<const double> xi) {
            const double a = xi[0];
            const double k = xi[1];
            return u.u_t - (a / (k * k)) * u.u_xx;
        },
        Channels::pde_1d()};
    std::vector<BoundaryCondition> bcs;
    bcs.push_back({0.0, {[](const FieldDuals& u, double, double, std::span<const double>) { return dirichlet(u, 0.0); },
                         Channels::value_only()}});
    bcs.push_back({kPi, {[](const FieldDuals& u, double, double t, std::span<const double> xi) {
                             return dirichlet(u, std::exp(-xi[0] * t) * std::sin(kPi * xi[1]));
                         },
                         Channels::value_only()}});
    ResidualTerm initial{[](const FieldDuals& u, double x, double, std::span<const double> xi) {
                             return dirichlet(u, std::sin(xi[1] * x));
                         },
                         Channels::value_only()};
    ExactSolution exact = [](double x, double t, std::span<const double> xi) {
        return diffusion_exact_jet(xi[0], xi[1], x, t);
    };
    return RandomProblem{"diffusion",          DomainSpec::pde_1d({0.0, kPi}, {0.0, 1.0}),
                         std::move(params),    std::move(interior),
                         std::move(bcs),       std::move(initial),
                         std::move(exact)};
}

double reaction_g(double x, double r1, double r2) {
    const double c = std::cos(r2 * x);
    return 0.2 + std::exp(r1 * x) * c * c;
}

double forcing_f(double x, double k1, double k2) {
    const double s = std::sin(k2 * x);
    const double d = x - 0.25;
    return std::exp(-d * d / (2.0 * k1 * k1)) * s * s;
}

double reaction_initial(double x) {
    const double c = std::cos(kPi * x);
    return 0.5 * c * c;
}

RandomProblem make_reaction_diffusion_problem() {
    ParameterSpace params({{"r1", 0.5, 1.0}, {"r2", 3.0, 4.0}, {"k1", 0.2, 0.8}, {"k2", 1.0, 4.0}});
    ResidualTerm interior{
        [](const FieldDuals& u, double x, double, std::span<const double> xi) {
            const double g = reaction_g(x, xi[0], xi[1]);
            const double f = forcing_f(x, xi[2], xi[3]);
            return u.u_t - kReactionDiffusivity * u.u_xx + g * (u.u * u.u * u.u) - Dual(f);
        },
        Channels::pde_1d()};
    std::vector<BoundaryCondition> bcs;
    for (double xb : {-1.0, 1.0}) {
        bcs.push_back({xb, {[](const FieldDuals& u, double, double, std::span<const double>) { return dirichlet(u, 0.5); },
                            Channels::value_only()}});
    }
    ResidualTerm initial{[](const FieldDuals& u, double x, double, std::span<const double>) {
                             return dirichlet(u, reaction_initial(x));
                         },
                         Channels::value_only()};
    return RandomProblem{"reaction_diffusion", DomainSpec::pde_1d({-1.0, 1.0}, {0.0, 4.0}),
                         std::move(params),    std::move(interior),
                         std::move(bcs),       std::move(initial),
                         std::nullopt};
}

std::vector<std::string> problem_names() { return {"bistable", "diffusion", "reaction_diffusion"}; }

RandomProblem make_problem(const std::string& name) {
    if (name == "bistable") return make_bistable_problem();
    if (name == "diffusion") return make_diffusion_problem();
    if (name == "reaction_diffusion") return make_reaction_diffusion_problem();
    throw InvalidArgument("unknown problem '" + name + "' (registered: bistable, diffusion, reaction_diffusion)");
}

}  // namespace nmeasure
