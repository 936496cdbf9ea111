#pragma once

#include <complex>

namespace maskit {

struct ComplexDistance {
    double d = 0.0;    // >= 0
    double psi = 0.0;  // in (-pi, pi]
};

// D with coth^2(D/2) = [z1,w1,w2,z2] = ((z1-w2)/(z1-w1)) ((w1-z2)/(w2-z2)),
// between the geodesics (z1 z2) and (w1 w2).
ComplexDistance complex_distance(std::complex<double> z1, std::complex<double> z2,
                                 std::complex<double> w1, std::complex<double> w2);

// phi = 2 asin(sin psi sin(theta/2)), psi in (0, pi/2], theta in [0, pi)
double bending_angle(double psi, double theta);

enum class TraceKind { LOXODROMIC, PARABOLIC, ELLIPTIC };

struct ComplexLength {
    std::complex<double> value;
    TraceKind kind = TraceKind::LOXODROMIC;
};

// 2 cosh(cl/2) = +-tr with Re cl >= 0 and Im cl in (-pi, pi].
ComplexLength complex_length_from_trace(std::complex<double> tr);

}  // namespace maskit
