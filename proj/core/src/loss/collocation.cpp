#include "nmeasure/loss/collocation.hpp"

#include <random>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

std::string to_string(SamplingStrategy s) {
    return s == SamplingStrategy::cartesian_product ? "cartesian_product" : "uniform_random";
}

SamplingStrategy sampling_strategy_from_string(const std::string& s) {
    if (s == "uniform_random") return SamplingStrategy::uniform_random;
    if (s == "cartesian_product") return SamplingStrategy::cartesian_product;
    throw InvalidArgument("unknown sampling strategy '" + s + "' (expected uniform_random or cartesian_product)");
}

std::size_t CollocationBatch::boundary_point_count() const {
    std::size_t n = 0;
    for (const auto& b : boundary) n += b.size();
    return n;
}

void CollocationBatch::set_parameters(const ParameterSpace& space, Eigen::MatrixXd raw) {
    if (raw.rows() < 1) throw InvalidArgument("CollocationBatch: parameter batch must have at least one row");
    xi_hat = space.standardize_rows(raw);
    xi = std::move(raw);
}

CollocationBatch sample_collocation(const RandomProblem& problem, const CollocationCounts& counts,
                                    SamplingStrategy strategy, std::uint64_t seed) {
    if (counts.n_x < 1 || counts.n_t < 1 || counts.n_boundary < 1 || counts.n_initial < 1) {
        throw InvalidArgument("sample_collocation: all counts must be >= 1");
    }
    std::mt19937_64 rng(seed);
    const auto& time = problem.domain.time();
    std::uniform_real_distribution<double> draw_t(time.lo, time.hi);
    CollocationBatch batch;

    if (!problem.domain.has_space()) {
        for (std::size_t i = 0; i < counts.n_t; ++i) batch.interior.push_back({0.0, draw_t(rng)});
        batch.initial.push_back({0.0, time.lo});
        return batch;
    }

    const auto& space = problem.domain.space();
    std::uniform_real_distribution<double> draw_x(space.lo, space.hi);
    if (strategy == SamplingStrategy::cartesian_product) {
        std::vector<double> xs(counts.n_x), ts(counts.n_t);
        for (auto& x : xs) x = draw_x(rng);
        for (auto& t : ts) t = draw_t(rng);
        for (double x : xs) {
            for (double t : ts) batch.interior.push_back({x, t});
        }
    } else {
        const std::size_t n = counts.n_x * counts.n_t;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = draw_x(rng);
            batch.interior.push_back({x, draw_t(rng)});
        }
    }
    for (const auto& bc : problem.boundaries) {
        PointSet pts;
        for (std::size_t i = 0; i < counts.n_boundary; ++i) pts.push_back({bc.x, draw_t(rng)});
        batch.boundary.push_back(std::move(pts));
    }
    for (std::size_t i = 0; i < counts.n_initial; ++i) batch.initial.push_back({draw_x(rng), time.lo});
    return batch;
}

ResampleFlags resample_due(std::size_t iteration, std::size_t domain_period, std::size_t param_period) {
    if (domain_period < 1 || param_period < 1) throw InvalidArgument("resample_due: periods must be >= 1");
    if (iteration == 0) return {};
    return {iteration % domain_period == 0, iteration % param_period == 0};
}

}  // namespace nmeasure
