#include "nmeasure/train/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

double cubic_interpolate(double x1, double f1, double g1, double x2, double f2, double g2, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    if (!std::isfinite(f1) || !std::isfinite(f2) || !std::isfinite(g1) || !std::isfinite(g2)) return mid;
    const double d1 = g1 + g2 - 3.0 * (f1 - f2) / (x1 - x2);
    const double d2_square = d1 * d1 - g1 * g2;
    if (!(d2_square >= 0.0)) return mid;
    const double d2 = std::sqrt(d2_square);
    double min_pos = 0.0;
    if (x1 <= x2) {
        min_pos = x2 - (x2 - x1) * ((g2 + d2 - d1) / (g2 - g1 + 2.0 * d2));
    } else {
        min_pos = x1 - (x1 - x2) * ((g1 + d2 - d1) / (g1 - g2 + 2.0 * d2));
    }
    if (!std::isfinite(min_pos)) return mid;
    return std::min(std::max(min_pos, lo), hi);
}

Lbfgs::Lbfgs(LbfgsOptions options) : options_(options) {
    if (!(options_.lr > 0.0)) throw InvalidArgument("L-BFGS: learning rate must be positive");
    if (options_.max_iterations < 1) throw InvalidArgument("L-BFGS: max_iterations must be >= 1");
    if (options_.history_size < 1) throw InvalidArgument("L-BFGS: history_size must be >= 1");
    if (options_.max_evaluations == 0) options_.max_evaluations = options_.max_iterations * 5 / 4;
}

void Lbfgs::reset() {
    n_iter_ = 0;
    dirs_.clear();
    steps_.clear();
    rho_.clear();
    h_diag_ = 1.0;
}

Lbfgs::SearchResult Lbfgs::strong_wolfe(const Objective& objective, const Eigen::VectorXd& x, double t,
                                        const Eigen::VectorXd& d, double f, const Eigen::VectorXd& g,
                                        double gtd) const {
    const double c1 = options_.c1;
    const double c2 = options_.c2;
    const std::size_t max_ls = options_.max_line_search;
    const double d_norm = d.cwiseAbs().maxCoeff();

    // Trial points that overflow count as +inf so the search backs off.
    auto eval = [&](double step, Eigen::VectorXd& grad) {
        Eigen::VectorXd trial = x + step * d;
        double val = std::numeric_limits<double>::infinity();
        try {
            val = objective(trial, grad);
        } catch (const NonFiniteValue&) {
            val = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(val) || !grad.allFinite()) {
            grad = Eigen::VectorXd::Zero(x.size());
            val = std::numeric_limits<double>::infinity();
        }
        return val;
    };

    Eigen::VectorXd g_new(x.size());
    double f_new = eval(t, g_new);
    std::size_t evals = 1;
    double gtd_new = g_new.dot(d);

    double t_prev = 0.0;
    double f_prev = f;
    Eigen::VectorXd g_prev = g;
    double gtd_prev = gtd;
    bool done = false;
    std::size_t ls_iter = 0;

    std::vector<double> bracket, bracket_f, bracket_gtd;
    std::vector<Eigen::VectorXd> bracket_g;

    while (ls_iter < max_ls) {
        if (f_new > f + c1 * t * gtd || (ls_iter > 1 && f_new >= f_prev)) {
            bracket = {t_prev, t};
            bracket_f = {f_prev, f_new};
            bracket_g = {g_prev, g_new};
            bracket_gtd = {gtd_prev, gtd_new};
            break;
        }
        if (std::abs(gtd_new) <= -c2 * gtd) {
            bracket = {t};
            bracket_f = {f_new};
            bracket_g = {g_new};
            bracket_gtd = {gtd_new};
            done = true;
            break;
        }
        if (gtd_new >= 0.0) {
            bracket = {t_prev, t};
            bracket_f = {f_prev, f_new};
            bracket_g = {g_prev, g_new};
            bracket_gtd = {gtd_prev, gtd_new};
            break;
        }
        const double min_step = t + 0.01 * (t - t_prev);
        const double max_step = t * 10.0;
        const double tmp = t;
        t = cubic_interpolate(t_prev, f_prev, gtd_prev, t, f_new, gtd_new, min_step, max_step);
        t_prev = tmp;
        f_prev = f_new;
        g_prev = g_new;
        gtd_prev = gtd_new;
        f_new = eval(t, g_new);
        ++evals;
        gtd_new = g_new.dot(d);
        ++ls_iter;
    }
    if (ls_iter == max_ls) {
        bracket = {0.0, t};
        bracket_f = {f, f_new};
        bracket_g = {g, g_new};
        bracket_gtd = {gtd, gtd_new};
    }

    bool insufficient_progress = false;
    std::size_t low = 0, high = 1;
    if (bracket.size() == 2 && bracket_f[0] > bracket_f[1]) std::swap(low, high);
    while (!done && ls_iter < max_ls && bracket.size() == 2) {
        if (std::abs(bracket[1] - bracket[0]) * d_norm < options_.tolerance_change) break;
        const double bmax = std::max(bracket[0], bracket[1]);
        const double bmin = std::min(bracket[0], bracket[1]);
        t = cubic_interpolate(bracket[0], bracket_f[0], bracket_gtd[0], bracket[1], bracket_f[1], bracket_gtd[1],
                              bmin, bmax);
        const double eps = 0.1 * (bmax - bmin);
        if (std::min(bmax - t, t - bmin) < eps) {
            if (insufficient_progress || t >= bmax || t <= bmin) {
                t = std::abs(t - bmax) < std::abs(t - bmin) ? bmax - eps : bmin + eps;
                insufficient_progress = false;
            } else {
                insufficient_progress = true;
            }
        } else {
            insufficient_progress = false;
        }
        f_new = eval(t, g_new);
        ++evals;
        gtd_new = g_new.dot(d);
        ++ls_iter;

        if (f_new > f + c1 * t * gtd || f_new >= bracket_f[low]) {
            bracket[high] = t;
            bracket_f[high] = f_new;
            bracket_g[high] = g_new;
            bracket_gtd[high] = gtd_new;
            if (bracket_f[0] <= bracket_f[1]) {
                low = 0;
                high = 1;
            } else {
                low = 1;
                high = 0;
            }
        } else {
            if (std::abs(gtd_new) <= -c2 * gtd) {
                done = true;
            } else if (gtd_new * (bracket[high] - bracket[low]) >= 0.0) {
                bracket[high] = bracket[low];
                bracket_f[high] = bracket_f[low];
                bracket_g[high] = bracket_g[low];
                bracket_gtd[high] = bracket_gtd[low];
            }
            bracket[low] = t;
            bracket_f[low] = f_new;
            bracket_g[low] = g_new;
            bracket_gtd[low] = gtd_new;
        }
    }
    if (bracket.size() == 1) low = 0;
    return {bracket_f[low], bracket_g[low], bracket[low], evals};
}

LbfgsStepResult Lbfgs::step(Eigen::VectorXd& x, const Objective& objective) {
    LbfgsStepResult result;
    Eigen::VectorXd g(x.size());
    double loss = objective(x, g);
    if (!std::isfinite(loss) || !g.allFinite()) throw NonFiniteValue("L-BFGS: objective is not finite at the start point");
    result.initial_loss = loss;
    result.final_loss = loss;
    result.evaluations = 1;
    if (g.cwiseAbs().maxCoeff() <= options_.tolerance_grad) return result;

    std::size_t iter = 0;
    while (iter < options_.max_iterations) {
        ++iter;
        ++n_iter_;
        if (n_iter_ == 1) {
            d_ = -g;
            dirs_.clear();
            steps_.clear();
            rho_.clear();
            h_diag_ = 1.0;
        } else {
            const Eigen::VectorXd y = g - prev_grad_;
            const Eigen::VectorXd s = d_ * t_;
            const double ys = y.dot(s);
            if (ys > 1e-10) {
                if (dirs_.size() == options_.history_size) {
                    dirs_.pop_front();
                    steps_.pop_front();
                    rho_.pop_front();
                }
                dirs_.push_back(y);
                steps_.push_back(s);
                rho_.push_back(1.0 / ys);
                h_diag_ = ys / y.dot(y);
            }
            // Two-loop recursion for -H g.
            const std::size_t m = dirs_.size();
            std::vector<double> alpha(m);
            Eigen::VectorXd q = -g;
            for (std::size_t i = m; i-- > 0;) {
                alpha[i] = steps_[i].dot(q) * rho_[i];
                q -= alpha[i] * dirs_[i];
            }
            d_ = q * h_diag_;
            for (std::size_t i = 0; i < m; ++i) {
                const double beta = dirs_[i].dot(d_) * rho_[i];
                d_ += steps_[i] * (alpha[i] - beta);
            }
        }
        prev_grad_ = g;
        const double prev_loss = loss;

        t_ = n_iter_ == 1 ? std::min(1.0, 1.0 / g.cwiseAbs().sum()) * options_.lr : options_.lr;
        const double gtd = g.dot(d_);
        if (gtd > -options_.tolerance_change) break;

        SearchResult ls = strong_wolfe(objective, x, t_, d_, loss, g, gtd);
        result.evaluations += ls.evaluations;
        const bool sufficient = std::isfinite(ls.f) && ls.f <= loss + options_.c1 * ls.t * gtd;
        if (!sufficient) {
            // Keep x; the curvature pairs no longer describe a usable model.
            ++result.rejected_steps;
            reset();
            break;
        }
        t_ = ls.t;
        x += t_ * d_;
        loss = ls.f;
        g = std::move(ls.g);
        result.final_loss = loss;
        result.iterations = iter;

        if (iter == options_.max_iterations) break;
        if (result.evaluations >= options_.max_evaluations) break;
        if (g.cwiseAbs().maxCoeff() <= options_.tolerance_grad) break;
        if ((d_ * t_).cwiseAbs().maxCoeff() <= options_.tolerance_change) break;
        if (std::abs(loss - prev_loss) < options_.tolerance_change) break;
    }
    return result;
}

}  // namespace nmeasure
