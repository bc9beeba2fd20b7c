#pragma once

#include <optional>
#include <string>

namespace nmeasure {

enum class DomainKind { ode, pde_1d };

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    bool contains(double v, double slack = 1e-12) const {
        return v >= lo - slack && v <= hi + slack;
    }
};

/// Space-time box D x [t0, t1]. For ODEs the spatial interval is absent and
/// every x coordinate is ignored.
class DomainSpec {
public:
    static DomainSpec ode(Interval time);
    static DomainSpec pde_1d(Interval space, Interval time);

    DomainKind kind() const { return kind_; }
    bool has_space() const { return kind_ == DomainKind::pde_1d; }
    const Interval& time() const { return time_; }
    /// Throws when the domain is an ODE domain.
    const Interval& space() const;

    bool contains(double x, double t) const;
    /// Throws InvalidArgument naming the point when outside.
    void check_contains(double x, double t) const;

private:
    DomainSpec(DomainKind kind, std::optional<Interval> space, Interval time);

    DomainKind kind_;
    std::optional<Interval> space_;
    Interval time_;
};

}  // namespace nmeasure
