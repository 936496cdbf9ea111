#include "maskit/topterms.hpp"

#include <cstdlib>

#include "maskit/errors.hpp"

namespace maskit {

namespace {

BiPoly power(const BiPoly& x, int n) {
    BiPoly r(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace

TopTermsReport top_terms_check(const BiPoly& tr, const CanonicalCoords& c) {
    if (tr.is_zero()) throw PreconditionError("zero trace polynomial");
    if (c.q1 < 0 || c.q2 < 0 || c.q1 + c.q2 == 0)
        throw PreconditionError("top terms need q1, q2 >= 0 and q1 + q2 > 0");

    TopTermsReport rep;
    rep.q1 = static_cast<int>(c.q1);
    rep.q2 = static_cast<int>(c.q2);
    rep.p1 = c.p1;
    rep.p2 = c.p2;
    rep.leading = tr.coeff(rep.q1, rep.q2);
    rep.sign = rep.leading > 0 ? 1 : (rep.leading < 0 ? -1 : 0);

    const int n = rep.q1 + rep.q2;
    const BigInt mag = BigInt(1) << std::abs(rep.q2 - rep.q1);
    BiPoly model(Rational(mag) * rep.sign);
    if (rep.q1 > 0) model = model * power(BiPoly::tau1() + BiPoly(Rational(2 * c.p1, c.q1)), rep.q1);
    if (rep.q2 > 0) model = model * power(BiPoly::tau2() + BiPoly(Rational(2 * c.p2, c.q2)), rep.q2);
    const BiPoly rem = tr - model;
    rep.remainder_total_degree = rem.total_degree();

    std::string why;
    if (rep.sign == 0)
        why = "no t1^q1 t2^q2 term";
    else if (abs(rep.leading) != Rational(mag))
        why = "leading coefficient " + rational_str(rep.leading) + " is not +-2^|q2-q1|";
    else if (tr.degree1() != rep.q1 || tr.degree2() != rep.q2)
        why = "partial degrees differ from (q1,q2)";
    else if (rep.remainder_total_degree > n - 2)
        why = "remainder has total degree " + std::to_string(rep.remainder_total_degree);
    rep.passes = why.empty();
    rep.diagnostic = rep.passes ? "ok" : why;
    return rep;
}

TopTermsReport top_terms_check(const GroupWord& w, const CanonicalCoords& c) {
    return top_terms_check(trace_poly(cyclic_reduce(w)), c);
}

CanonicalCoords infer_coords_from_trace(const BiPoly& tr) {
    if (tr.is_zero()) throw NotSimpleError("zero trace polynomial");
    const int q1 = tr.degree1(), q2 = tr.degree2();
    if (q1 + q2 == 0) throw NotSimpleError("constant trace: peripheral or pinched curve");
    const Rational lead = tr.coeff(q1, q2);
    if (lead == 0) throw NotSimpleError("trace has no t1^q1 t2^q2 term; not a simple curve or convention breach");
    const Rational p1 = q1 > 0 ? tr.coeff(q1 - 1, q2) / lead / 2 : Rational(0);
    const Rational p2 = q2 > 0 ? tr.coeff(q1, q2 - 1) / lead / 2 : Rational(0);
    if (!is_integer(p1) || !is_integer(p2))
        throw NotSimpleError("non-integral twist (" + rational_str(p1) + ", " + rational_str(p2) +
                             "); not a simple curve or convention breach");
    CanonicalCoords c{q1, static_cast<std::int64_t>(boost::multiprecision::numerator(p1)), q2,
                      static_cast<std::int64_t>(boost::multiprecision::numerator(p2))};
    const TopTermsReport rep = top_terms_check(tr, c);
    if (!rep.passes) throw NotSimpleError(rep.diagnostic + "; not a simple curve or convention breach");
    return c;
}

CanonicalCoords infer_coords_from_trace(const GroupWord& w) {
    return infer_coords_from_trace(trace_poly(cyclic_reduce(w)));
}

}  // namespace maskit
