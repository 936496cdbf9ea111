#pragma once

#include <string>

#include "maskit/matrix.hpp"

namespace maskit {

enum class Membership { PROVED_INSIDE, PROVED_OUTSIDE, UNKNOWN };

struct MembershipVerdict {
    Membership status = Membership::UNKNOWN;
    std::string witness;  // the binding inequality
};

std::string to_string(Membership m);

MembershipVerdict membership(const ParameterPoint& p);

// tau_axis -> tau_axis + 2n
ParameterPoint dehn_twist(const ParameterPoint& p, int axis, long n);

struct FundamentalDisks {
    cplx b2_center;
    cplx b3_center;
    double radius = 0.0;
};

FundamentalDisks fundamental_disks(const ParameterPoint& p);

}  // namespace maskit
