#include "nmeasure/core/domain.hpp"

#include <sstream>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

DomainSpec::DomainSpec(DomainKind kind, std::optional<Interval> space, Interval time)
    : kind_(kind), space_(space), time_(time) {
    if (!(time_.lo < time_.hi)) throw InvalidArgument("DomainSpec: need t0 < t1");
    if (kind_ == DomainKind::pde_1d) {
        if (!space_ || !(space_->lo < space_->hi)) {
            throw InvalidArgument("DomainSpec: pde_1d needs a space interval with x0 < x1");
        }
    }
}

DomainSpec DomainSpec::ode(Interval time) { return DomainSpec(DomainKind::ode, std::nullopt, time); }

DomainSpec DomainSpec::pde_1d(Interval space, Interval time) {
    return DomainSpec(DomainKind::pde_1d, space, time);
}

const Interval& DomainSpec::space() const {
    if (!space_) throw InvalidArgument("DomainSpec: ODE domain has no spatial interval");
    return *space_;
}

bool DomainSpec::contains(double x, double t) const {
    const double tslack = 1e-12 * time_.length();
    if (!time_.contains(t, tslack)) return false;
    if (space_ && !space_->contains(x, 1e-12 * space_->length())) return false;
    return true;
}

void DomainSpec::check_contains(double x, double t) const {
    if (!contains(x, t)) {
        std::ostringstream msg;
        msg << "point (x=" << x << ", t=" << t << ") lies outside the problem domain";
        throw InvalidArgument(msg.str());
    }
}

}  // namespace nmeasure
