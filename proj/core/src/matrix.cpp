#include "maskit/matrix.hpp"

#include "maskit/errors.hpp"

namespace maskit {

void require_upper(const ParameterPoint& p) {
    if (!(p.tau1.imag() > 0.0) || !(p.tau2.imag() > 0.0))
        throw PreconditionError("parameter point needs Im tau1 > 0 and Im tau2 > 0");
}

Mat2C generator_matrix(Letter l, const ParameterPoint& p) {
    Mat2C m;
    switch (l.gen) {
        case Gen::S1: m = {1.0, 2.0, 0.0, 1.0}; break;
        case Gen::S2: m = {1.0, 0.0, 2.0, 1.0}; break;
        case Gen::T: m = {1.0 + p.tau1 * p.tau2, p.tau1, p.tau2, 1.0}; break;
    }
    return l.inverted ? m.inverse() : m;
}

Mat2C evaluate(const GroupWord& w, const ParameterPoint& p) {
    Mat2C gens[6];
    for (int i = 0; i < 6; ++i) gens[i] = generator_matrix(Letter::from_index(i), p);
    Mat2C m;
    for (Letter l : w.letters()) m = m * gens[l.index()];
    return m;
}

cplx trace(const GroupWord& w, const ParameterPoint& p) { return evaluate(w, p).trace(); }

}  // namespace maskit
