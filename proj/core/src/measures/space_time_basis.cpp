#include "nmeasure/measures/space_time_basis.hpp"

#include "nmeasure/core/error.hpp"

namespace nmeasure {

ChebyshevValues chebyshev_all(std::size_t max_degree, double z) {
    ChebyshevValues c;
    c.t.assign(max_degree + 1, 0.0);
    c.dt.assign(max_degree + 1, 0.0);
    c.dtt.assign(max_degree + 1, 0.0);
    c.t[0] = 1.0;
    if (max_degree >= 1) {
        c.t[1] = z;
        c.dt[1] = 1.0;
    }
    for (std::size_t n = 1; n < max_degree; ++n) {
        c.t[n + 1] = 2.0 * z * c.t[n] - c.t[n - 1];
        c.dt[n + 1] = 2.0 * c.t[n] + 2.0 * z * c.dt[n] - c.dt[n - 1];
        c.dtt[n + 1] = 4.0 * c.dt[n] + 2.0 * z * c.dtt[n] - c.dtt[n - 1];
    }
    return c;
}

SpaceTimeBasis::SpaceTimeBasis(const DomainSpec& domain, std::size_t degree_x, std::size_t degree_t)
    : domain_(domain), degree_x_(domain.has_space() ? degree_x : 0), degree_t_(degree_t) {}

double SpaceTimeBasis::x_hat(double x) const {
    if (!domain_.has_space()) return 0.0;
    const auto& s = domain_.space();
    return 2.0 * (x - s.lo) / s.length() - 1.0;
}

double SpaceTimeBasis::t_hat(double t) const {
    const auto& s = domain_.time();
    return 2.0 * (t - s.lo) / s.length() - 1.0;
}

Eigen::MatrixXd SpaceTimeBasis::matrix(const std::vector<SpaceTime>& points, Channel channel) const {
    if ((channel == Channel::dx || channel == Channel::dxx) && !domain_.has_space()) {
        throw InvalidArgument("SpaceTimeBasis: spatial derivative requested on an ODE domain");
    }
    const double sx = domain_.has_space() ? 2.0 / domain_.space().length() : 0.0;
    const double st = 2.0 / domain_.time().length();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(points.size()));
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto cx = chebyshev_all(degree_x_, x_hat(points[p].x));
        const auto ct = chebyshev_all(degree_t_, t_hat(points[p].t));
        for (std::size_t m = 0; m <= degree_x_; ++m) {
            for (std::size_t n = 0; n <= degree_t_; ++n) {
                double v = 0.0;
                switch (channel) {
                    case Channel::value: v = cx.t[m] * ct.t[n]; break;
                    case Channel::dt: v = cx.t[m] * ct.dt[n] * st; break;
                    case Channel::dx: v = cx.dt[m] * sx * ct.t[n]; break;
                    case Channel::dxx: v = cx.dtt[m] * sx * sx * ct.t[n]; break;
                }
                out(static_cast<Eigen::Index>(m * (degree_t_ + 1) + n), static_cast<Eigen::Index>(p)) = v;
            }
        }
    }
    return out;
}

ModelEval SpaceTimeBasis::eval(std::size_t index, double x, double t) const {
    if (index >= size()) throw InvalidArgument("SpaceTimeBasis::eval: index out of range");
    const std::size_t m = index / (degree_t_ + 1);
    const std::size_t n = index % (degree_t_ + 1);
    const auto cx = chebyshev_all(degree_x_, x_hat(x));
    const auto ct = chebyshev_all(degree_t_, t_hat(t));
    const double st = 2.0 / domain_.time().length();
    ModelEval e;
    e.u = cx.t[m] * ct.t[n];
    e.u_t = cx.t[m] * ct.dt[n] * st;
    if (domain_.has_space()) {
        const double sx = 2.0 / domain_.space().length();
        e.u_x = cx.dt[m] * sx * ct.t[n];
        e.u_xx = cx.dtt[m] * sx * sx * ct.t[n];
    }
    return e;
}

}  // namespace nmeasure
