#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmeasure/core/domain.hpp"
#include "nmeasure/core/fields.hpp"
#include "nmeasure/core/parameter_space.hpp"

namespace nmeasure {

struct SpaceTime {
    double x = 0.0;
    double t = 0.0;
};

/// Strong-form pointwise residual A_xi u - f evaluated on the model channels
/// at (x, t) for raw (unstandardized) parameters xi.
using Residual =
    std::function<Dual(const FieldDuals& u, double x, double t, std::span<const double> xi)>;

/// Closed-form solution with the derivatives the residual needs.
using ExactSolution = std::function<ModelEval(double x, double t, std::span<const double> xi)>;

struct ResidualTerm {
    Residual residual;
    Channels channels;
};

/// Dirichlet-type condition imposed on the spatial boundary location x.
struct BoundaryCondition {
    double x = 0.0;
    ResidualTerm term;
};

/// A differential equation with random data: domain, parameter law and the
/// interior, boundary and initial residuals.
struct RandomProblem {
    std::string name;
    DomainSpec domain;
    ParameterSpace params;
    ResidualTerm interior;
    std::vector<BoundaryCondition> boundaries;
    ResidualTerm initial;
    std::optional<ExactSolution> exact_solution;

    /// Channels needed by any residual of the problem.
    Channels all_channels() const;
};

}  // namespace nmeasure
