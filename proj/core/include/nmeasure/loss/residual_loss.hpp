#pragma once

#include <array>

#include <Eigen/Core>

#include "nmeasure/core/problem.hpp"
#include "nmeasure/loss/collocation.hpp"
#include "nmeasure/measures/measure.hpp"

namespace nmeasure {

struct LossWeights {
    double interior = 1.0;
    double boundary = 1.0;
    double initial = 1.0;

    void validate() const;
};

struct LossEvaluation {
    double value = 0.0;
    /// Weighted interior, boundary and initial contributions (sum = value).
    std::array<double, 3> terms{};
    /// d(value)/d(theta); empty unless requested.
    Eigen::VectorXd gradient;
};

/// w_int * mean |interior residual|^2 + w_bc * mean |boundary residual|^2
///   + w_ic * mean |initial residual|^2,
/// each mean taken over every (parameter row, point) pair of the batch.
///
/// Parameter rows are processed in fixed-size chunks and reduced in order with
/// compensated summation, so results do not depend on scheduling. A NaN/Inf
/// residual raises NonFiniteValue naming the point and parameters.
LossEvaluation evaluate_loss(const NeuralMeasure& measure, const RandomProblem& problem,
                             const CollocationBatch& batch, const LossWeights& weights, bool with_gradient);

double residual_loss(const NeuralMeasure& measure, const RandomProblem& problem, const CollocationBatch& batch,
                     const LossWeights& weights);

}  // namespace nmeasure
