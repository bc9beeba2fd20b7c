#include "nmeasure/loss/residual_loss.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "nmeasure/core/error.hpp"
#include "nmeasure/core/summation.hpp"

namespace nmeasure {

namespace {

constexpr std::array<Channel, kChannelCount> kAllChannels = {Channel::value, Channel::dt, Channel::dx,
                                                             Channel::dxx};

struct TermInput {
    const PointSet* points;
    const ResidualTerm* term;
};

[[noreturn]] void report_non_finite(const char* term, const SpaceTime& p, const Eigen::MatrixXd& xi,
                                    Eigen::Index row) {
    std::ostringstream msg;
    msg << "non-finite " << term << " residual at (x=" << p.x << ", t=" << p.t << "), xi=(";
    for (Eigen::Index j = 0; j < xi.cols(); ++j) msg << (j ? ", " : "") << xi(row, j);
    msg << ")";
    throw NonFiniteValue(msg.str());
}

// Sum of squared residuals over all (xi row, point) pairs of one group of
// point sets that share a residual term, with the gradient of
// scale * sum accumulated into grad.
double accumulate_term(const NeuralMeasure& measure, const std::vector<TermInput>& inputs,
                       const CollocationBatch& batch, double scale, const char* name, Eigen::VectorXd* grad) {
    CompensatedSum total;
    const Eigen::Index nxi = batch.xi.rows();
    for (const auto& in : inputs) {
        const PointSet& points = *in.points;
        if (points.empty()) continue;
        const ResidualTerm& term = *in.term;
        const auto chunk = static_cast<Eigen::Index>(
            std::max<std::size_t>(1, std::min<std::size_t>(measure.preferred_xi_chunk(points.size()),
                                                            static_cast<std::size_t>(nxi))));
        std::vector<double> xi_row(static_cast<std::size_t>(batch.xi.cols()));
        for (Eigen::Index start = 0; start < nxi; start += chunk) {
            const Eigen::Index rows = std::min(chunk, nxi - start);
            std::unique_ptr<MeasureTape> tape;
            const FieldBlock f =
                measure.forward(points, batch.xi_hat.middleRows(start, rows), term.channels, grad ? &tape : nullptr);
            FieldBlock adj;
            if (grad) {
                for (Channel c : kAllChannels) {
                    if (f.has(c)) adj[c] = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(points.size()));
                }
            }
            auto channel_at = [&](Channel c, Eigen::Index i, Eigen::Index j) {
                return f.has(c) ? f[c](i, j) : 0.0;
            };
            CompensatedSum chunk_sum;
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(points.size()); ++j) {
                const SpaceTime& p = points[static_cast<std::size_t>(j)];
                for (Eigen::Index i = 0; i < rows; ++i) {
                    const Eigen::Index row = start + i;
                    for (std::size_t d = 0; d < xi_row.size(); ++d) xi_row[d] = batch.xi(row, static_cast<Eigen::Index>(d));
                    const FieldDuals u = FieldDuals::seeded(channel_at(Channel::value, i, j), channel_at(Channel::dt, i, j),
                                                            channel_at(Channel::dx, i, j), channel_at(Channel::dxx, i, j));
                    const Dual r = term.residual(u, p.x, p.t, xi_row);
                    if (!std::isfinite(r.v)) report_non_finite(name, p, batch.xi, row);
                    chunk_sum.add(r.v * r.v);
                    if (grad) {
                        for (Channel c : kAllChannels) {
                            const double partial = r.d[static_cast<std::size_t>(c)];
                            if (partial == 0.0) continue;
                            if (!adj.has(c)) {
                                throw InvalidArgument(std::string(name) + " residual depends on channel " +
                                                      std::to_string(static_cast<int>(c)) +
                                                      " that its term does not request");
                            }
                            adj[c](i, j) += scale * 2.0 * r.v * partial;
                        }
                    }
                }
            }
            total.add(chunk_sum.value());
            if (grad) measure.backward(*tape, adj, *grad);
        }
    }
    return total.value();
}

}  // namespace

void LossWeights::validate() const {
    if (interior < 0.0 || boundary < 0.0 || initial < 0.0) throw InvalidArgument("LossWeights: weights must be >= 0");
    if (interior == 0.0 && boundary == 0.0 && initial == 0.0) {
        throw InvalidArgument("LossWeights: at least one weight must be positive");
    }
}

LossEvaluation evaluate_loss(const NeuralMeasure& measure, const RandomProblem& problem,
                             const CollocationBatch& batch, const LossWeights& weights, bool with_gradient) {
    weights.validate();
    if (batch.xi.rows() < 1 || batch.xi_hat.rows() != batch.xi.rows()) {
        throw InvalidArgument("evaluate_loss: batch has no parameter rows (call set_parameters first)");
    }
    if (batch.boundary.size() != problem.boundaries.size()) {
        throw InvalidArgument("evaluate_loss: batch boundary sets do not match the problem boundaries");
    }
    LossEvaluation out;
    Eigen::VectorXd grad;
    if (with_gradient) grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(measure.parameter_count()));
    Eigen::VectorXd* g = with_gradient ? &grad : nullptr;
    const auto nxi = static_cast<double>(batch.xi.rows());

    if (weights.interior > 0.0 && !batch.interior.empty()) {
        const double scale = weights.interior / (nxi * static_cast<double>(batch.interior.size()));
        out.terms[0] = scale * accumulate_term(measure, {{&batch.interior, &problem.interior}}, batch, scale, "interior", g);
    }
    const std::size_t nb = batch.boundary_point_count();
    if (weights.boundary > 0.0 && nb > 0) {
        std::vector<TermInput> inputs;
        for (std::size_t k = 0; k < problem.boundaries.size(); ++k) {
            inputs.push_back({&batch.boundary[k], &problem.boundaries[k].term});
        }
        const double scale = weights.boundary / (nxi * static_cast<double>(nb));
        out.terms[1] = scale * accumulate_term(measure, inputs, batch, scale, "boundary", g);
    }
    if (weights.initial > 0.0 && !batch.initial.empty()) {
        const double scale = weights.initial / (nxi * static_cast<double>(batch.initial.size()));
        out.terms[2] = scale * accumulate_term(measure, {{&batch.initial, &problem.initial}}, batch, scale, "initial", g);
    }
    out.value = out.terms[0] + out.terms[1] + out.terms[2];
    if (with_gradient) out.gradient = std::move(grad);
    return out;
}

double residual_loss(const NeuralMeasure& measure, const RandomProblem& problem, const CollocationBatch& batch,
                     const LossWeights& weights) {
    return evaluate_loss(measure, problem, batch, weights, false).value;
}

}  // namespace nmeasure
