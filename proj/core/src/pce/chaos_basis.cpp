#include "nmeasure/pce/chaos_basis.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

namespace {

void check_unit_interval(double z) {
    if (!(std::abs(z) <= 1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "Legendre chaos argument " << z << " lies outside [-1, 1]";
        throw InvalidArgument(msg.str());
    }
}

}  // namespace

void legendre_orthonormal_all(std::size_t max_degree, double z, std::span<double> out) {
    check_unit_interval(z);
    if (out.size() < max_degree + 1) throw InvalidArgument("legendre_orthonormal_all: output too short");
    // Standard P_n first, normalized afterwards.
    double p_prev = 1.0;
    double p_cur = z;
    out[0] = 1.0;
    if (max_degree >= 1) out[1] = std::sqrt(3.0) * z;
    for (std::size_t n = 1; n < max_degree; ++n) {
        const double nn = static_cast<double>(n);
        const double p_next = ((2.0 * nn + 1.0) * z * p_cur - nn * p_prev) / (nn + 1.0);
        p_prev = p_cur;
        p_cur = p_next;
        out[n + 1] = std::sqrt(2.0 * (nn + 1.0) + 1.0) * p_next;
    }
}

double legendre_orthonormal(std::size_t n, double z) {
    std::vector<double> values(n + 1);
    legendre_orthonormal_all(n, z, values);
    return values[n];
}

std::size_t total_degree_cardinality(std::size_t dim, std::size_t p) {
    // C(dim + p, p) computed incrementally; exact for the sizes used here.
    std::size_t result = 1;
    for (std::size_t i = 1; i <= p; ++i) result = result * (dim + i) / i;
    return result;
}

ChaosBasis::ChaosBasis(std::size_t dim, std::size_t max_total_degree) : dim_(dim), degree_(max_total_degree) {
    if (dim_ < 1) throw InvalidArgument("ChaosBasis: dim must be >= 1");
    MultiIndex alpha(dim_, 0);
    // Compositions of each total degree, first component largest first.
    std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t pos, std::size_t remaining) {
        if (pos + 1 == dim_) {
            alpha[pos] = remaining;
            indices_.push_back(alpha);
            return;
        }
        for (std::size_t v = remaining + 1; v-- > 0;) {
            alpha[pos] = v;
            emit(pos + 1, remaining - v);
        }
    };
    for (std::size_t total = 0; total <= degree_; ++total) emit(0, total);
}

void ChaosBasis::eval_into(std::span<const double> xi_hat, double* out, std::vector<double>& scratch) const {
    const std::size_t stride = degree_ + 1;
    scratch.resize(dim_ * stride);
    for (std::size_t d = 0; d < dim_; ++d) {
        legendre_orthonormal_all(degree_, xi_hat[d], std::span<double>(scratch.data() + d * stride, stride));
    }
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        double v = 1.0;
        for (std::size_t d = 0; d < dim_; ++d) v *= scratch[d * stride + indices_[k][d]];
        out[k] = v;
    }
}

Eigen::VectorXd ChaosBasis::eval(std::span<const double> xi_hat) const {
    if (xi_hat.size() != dim_) {
        throw InvalidArgument("ChaosBasis::eval: expected " + std::to_string(dim_) + " coordinates");
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(cardinality()));
    std::vector<double> scratch;
    eval_into(xi_hat, out.data(), scratch);
    return out;
}

Eigen::MatrixXd ChaosBasis::eval_rows(const Eigen::MatrixXd& xi_hat) const {
    if (static_cast<std::size_t>(xi_hat.cols()) != dim_) {
        throw InvalidArgument("ChaosBasis::eval_rows: column count must equal the basis dimension");
    }
    Eigen::MatrixXd out(static_cast<Eigen::Index>(cardinality()), xi_hat.rows());
    std::vector<double> row(dim_);
    std::vector<double> scratch;
    for (Eigen::Index i = 0; i < xi_hat.rows(); ++i) {
        for (std::size_t d = 0; d < dim_; ++d) row[d] = xi_hat(i, static_cast<Eigen::Index>(d));
        eval_into(row, out.col(i).data(), scratch);
    }
    return out;
}

ChaosBasis build_basis(std::size_t dim, std::size_t p) { return ChaosBasis(dim, p); }

Eigen::VectorXd eval_basis(const ChaosBasis& basis, std::span<const double> xi_hat) { return basis.eval(xi_hat); }

}  // namespace nmeasure
