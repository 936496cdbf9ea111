#pragma once

#include <complex>

#include "maskit/word.hpp"

namespace maskit {

using cplx = std::complex<double>;

struct Mat2C {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }
    // SL2 inverse (d,-b;-c,a); assumes det = 1.
    Mat2C inverse() const { return {d, -b, -c, a}; }
    cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }

    friend Mat2C operator*(const Mat2C& x, const Mat2C& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

struct ParameterPoint {
    cplx tau1;
    cplx tau2;
};

// Throws PreconditionError unless Im tau1 > 0 and Im tau2 > 0.
void require_upper(const ParameterPoint& p);

Mat2C generator_matrix(Letter l, const ParameterPoint& p);
Mat2C evaluate(const GroupWord& w, const ParameterPoint& p);
cplx trace(const GroupWord& w, const ParameterPoint& p);

}  // namespace maskit
