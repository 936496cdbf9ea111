#include "maskit/domain.hpp"

#include "maskit/errors.hpp"
#include "maskit/output.hpp"

namespace maskit {

std::string to_string(Membership m) {
    switch (m) {
        case Membership::PROVED_INSIDE: return "PROVED_INSIDE";
        case Membership::PROVED_OUTSIDE: return "PROVED_OUTSIDE";
        case Membership::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

MembershipVerdict membership(const ParameterPoint& p) {
    const double y1 = p.tau1.imag(), y2 = p.tau2.imag();
    if (!(y1 > 0.0) || !(y2 > 0.0))
        throw PreconditionError("membership needs Im tau1 > 0 and Im tau2 > 0");
    const double prod = y1 * y2;
    const std::string ys = "Im tau1 = " + format_double(y1) + ", Im tau2 = " + format_double(y2);
    if (y1 < 0.5) return {Membership::PROVED_OUTSIDE, "Im tau1 < 1/2 (" + ys + ")"};
    if (y2 < 0.5) return {Membership::PROVED_OUTSIDE, "Im tau2 < 1/2 (" + ys + ")"};
    if (prod < 1.0)
        return {Membership::PROVED_OUTSIDE, "Im tau1 * Im tau2 = " + format_double(prod) + " < 1"};
    if (y1 > 1.0 && y2 > 1.0 && prod > 4.0)
        return {Membership::PROVED_INSIDE,
                "Im tau1, Im tau2 > 1 and Im tau1 * Im tau2 = " + format_double(prod) + " > 4"};
    if (y1 <= 1.0) return {Membership::UNKNOWN, "Im tau1 = " + format_double(y1) + " in [1/2, 1]"};
    if (y2 <= 1.0) return {Membership::UNKNOWN, "Im tau2 = " + format_double(y2) + " in [1/2, 1]"};
    return {Membership::UNKNOWN, "Im tau1 * Im tau2 = " + format_double(prod) + " in [1, 4]"};
}

ParameterPoint dehn_twist(const ParameterPoint& p, int axis, long n) {
    if (axis != 1 && axis != 2) throw PreconditionError("axis must be 1 or 2");
    ParameterPoint q = p;
    (axis == 1 ? q.tau1 : q.tau2) += 2.0 * static_cast<double>(n);
    return q;
}

FundamentalDisks fundamental_disks(const ParameterPoint& p) {
    const double y2 = p.tau2.imag();
    if (!(y2 > 0.0)) throw PreconditionError("fundamental disks need Im tau2 > 0");
    const cplx i(0.0, 1.0);
    return {i / y2, p.tau1 - i / y2, 1.0 / y2};
}

}  // namespace maskit
