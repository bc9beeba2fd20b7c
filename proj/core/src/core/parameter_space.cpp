#include "nmeasure/core/parameter_space.hpp"

#include <random>
#include <sstream>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

ParameterSpace::ParameterSpace(std::vector<UniformParameter> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidArgument("ParameterSpace: at least one parameter is required");
    }
    for (const auto& e : entries_) {
        if (!(e.lower < e.upper)) {
            std::ostringstream msg;
            msg << "ParameterSpace: parameter '" << e.name << "' needs lower < upper (got ["
                << e.lower << ", " << e.upper << "])";
            throw InvalidArgument(msg.str());
        }
    }
}

Eigen::MatrixXd ParameterSpace::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw InvalidArgument("ParameterSpace::sample: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dimension()));
    // Row-major draw order so that prefixes of a larger sample are stable.
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < dimension(); ++j) {
            const auto& e = entries_[j];
            out(i, static_cast<Eigen::Index>(j)) = e.lower + e.width() * unit(rng);
        }
    }
    return out;
}

bool ParameterSpace::contains(std::span<const double> xi) const {
    if (xi.size() != dimension()) return false;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const double slack = 1e-12 * entries_[j].width();
        if (!(xi[j] >= entries_[j].lower - slack && xi[j] <= entries_[j].upper + slack)) return false;
    }
    return true;
}

std::vector<double> ParameterSpace::standardize(std::span<const double> xi) const {
    if (xi.size() != dimension()) {
        throw InvalidArgument("standardize: expected " + std::to_string(dimension()) +
                              " parameters, got " + std::to_string(xi.size()));
    }
    if (!contains(xi)) {
        std::ostringstream msg;
        msg << "standardize: invalid sample, outside parameter bounds:";
        for (double v : xi) msg << ' ' << v;
        throw InvalidArgument(msg.str());
    }
    std::vector<double> out(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const auto& e = entries_[j];
        out[j] = 2.0 * (xi[j] - e.lower) / e.width() - 1.0;
    }
    return out;
}

std::vector<double> ParameterSpace::unstandardize(std::span<const double> xi_hat) const {
    if (xi_hat.size() != dimension()) {
        throw InvalidArgument("unstandardize: dimension mismatch");
    }
    std::vector<double> out(xi_hat.size());
    for (std::size_t j = 0; j < xi_hat.size(); ++j) {
        const auto& e = entries_[j];
        out[j] = e.lower + 0.5 * (xi_hat[j] + 1.0) * e.width();
    }
    return out;
}

Eigen::MatrixXd ParameterSpace::standardize_rows(const Eigen::MatrixXd& xi) const {
    if (static_cast<std::size_t>(xi.cols()) != dimension()) {
        throw InvalidArgument("standardize_rows: column count does not match parameter dimension");
    }
    Eigen::MatrixXd out(xi.rows(), xi.cols());
    std::vector<double> row(dimension());
    for (Eigen::Index i = 0; i < xi.rows(); ++i) {
        for (Eigen::Index j = 0; j < xi.cols(); ++j) row[static_cast<std::size_t>(j)] = xi(i, j);
        const auto hat = standardize(row);
        for (Eigen::Index j = 0; j < xi.cols(); ++j) out(i, j) = hat[static_cast<std::size_t>(j)];
    }
    return out;
}

Eigen::MatrixXd sample_parameters(const ParameterSpace& space, std::size_t n, std::uint64_t seed) {
    return space.sample(n, seed);
}

std::vector<double> standardize_parameters(const ParameterSpace& space, std::span<const double> xi) {
    return space.standardize(xi);
}

}  // namespace nmeasure
