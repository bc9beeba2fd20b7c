#pragma once

#include <cstddef>
#include <deque>
#include <functional>

#include <Eigen/Core>

namespace nmeasure {

struct LbfgsOptions {
    double lr = 1.0;
    std::size_t max_iterations = 20;
    /// 0 means max_iterations * 5 / 4.
    std::size_t max_evaluations = 0;
    double tolerance_grad = 1e-7;
    double tolerance_change = 1e-9;
    std::size_t history_size = 20;
    /// Sufficient-decrease and curvature constants of the strong Wolfe search.
    double c1 = 1e-4;
    double c2 = 0.9;
    std::size_t max_line_search = 25;
};

/// Returns f(x) and writes grad f(x) into grad.
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct LbfgsStepResult {
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    /// Line searches whose end point failed the sufficient-decrease test and
    /// were therefore not taken.
    std::size_t rejected_steps = 0;
};

/// Limited-memory BFGS with a strong-Wolfe line search (cubic interpolation
/// and zoom). One call to step() runs up to max_iterations iterations; the
/// curvature history persists across calls, as for a stateful optimizer.
class Lbfgs {
public:
    explicit Lbfgs(LbfgsOptions options = {});

    LbfgsStepResult step(Eigen::VectorXd& x, const Objective& objective);
    void reset();
    std::size_t history_length() const { return dirs_.size(); }
    const LbfgsOptions& options() const { return options_; }

private:
    struct SearchResult {
        double f;
        Eigen::VectorXd g;
        double t;
        std::size_t evaluations;
    };
    SearchResult strong_wolfe(const Objective& objective, const Eigen::VectorXd& x, double t,
                              const Eigen::VectorXd& d, double f, const Eigen::VectorXd& g, double gtd) const;

    LbfgsOptions options_;
    std::size_t n_iter_ = 0;
    Eigen::VectorXd d_;
    double t_ = 0.0;
    double h_diag_ = 1.0;
    Eigen::VectorXd prev_grad_;
    std::deque<Eigen::VectorXd> dirs_;   // y_k
    std::deque<Eigen::VectorXd> steps_;  // s_k
    std::deque<double> rho_;
};

/// Minimizer of the cubic interpolating (x1, f1, g1) and (x2, f2, g2),
/// clamped to [lo, hi]; the midpoint when no real minimizer exists.
double cubic_interpolate(double x1, double f1, double g1, double x2, double f2, double g2, double lo, double hi);

}  // namespace nmeasure
