#pragma once

#include "maskit/bipoly.hpp"
#include "maskit/coords.hpp"
#include "maskit/word.hpp"

namespace maskit {

struct TopTermsReport {
    int sign = 0;  // sign of the leading coefficient
    int q1 = 0, q2 = 0;
    Rational p1, p2;
    Rational leading;
    int remainder_total_degree = -1;  // -1 when the remainder vanishes
    bool passes = false;
    std::string diagnostic;
};

// Compares the trace polynomial's leading block with
// +-2^|q2-q1| (t1 + 2p1/q1)^q1 (t2 + 2p2/q2)^q2 + R, deg R <= q1+q2-2.
TopTermsReport top_terms_check(const BiPoly& trace, const CanonicalCoords& c);
TopTermsReport top_terms_check(const GroupWord& w, const CanonicalCoords& c);

// Authoritative coordinates: q_i = deg in tau_i, p_i from the subleading block.
// Throws NotSimpleError on non-integral p, bad leading coefficient or remainder.
CanonicalCoords infer_coords_from_trace(const BiPoly& trace);
CanonicalCoords infer_coords_from_trace(const GroupWord& w);

}  // namespace maskit
