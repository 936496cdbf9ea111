#include "maskit/geometry.hpp"

#include <cmath>

#include "maskit/errors.hpp"

namespace maskit {

namespace {

using C = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

bool is_inf(C z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

double wrap(double a) {
    while (a <= -pi) a += 2 * pi;
    while (a > pi) a -= 2 * pi;
    return a;
}

}  // namespace

ComplexDistance complex_distance(C z1, C z2, C w1, C w2) {
    const C pts[4] = {z1, z2, w1, w2};
    int infinite = 0;
    for (int i = 0; i < 4; ++i) {
        if (is_inf(pts[i])) {
            ++infinite;
            continue;
        }
        for (int j = i + 1; j < 4; ++j)
            if (!is_inf(pts[j]) && std::abs(pts[i] - pts[j]) <= 1e-14 * (1.0 + std::abs(pts[i])))
                throw PreconditionError("complex_distance needs four distinct endpoints");
    }
    if (infinite > 1) throw PreconditionError("complex_distance needs four distinct endpoints");

    // X = (z1-w2)(w1-z2) / ((z1-w1)(w2-z2)); an infinite point cancels between
    // its two factors, leaving +-1.
    C x;
    if (is_inf(z1)) x = (w1 - z2) / (w2 - z2);
    else if (is_inf(w1)) x = (z1 - w2) / (w2 - z2) * C(-1.0);
    else if (is_inf(z2)) x = (z1 - w2) / (z1 - w1);
    else if (is_inf(w2)) x = (w1 - z2) / (z1 - w1) * C(-1.0);
    else x = (z1 - w2) * (w1 - z2) / ((z1 - w1) * (w2 - z2));

    if (std::abs(x - 1.0) < 1e-15) throw PreconditionError("geodesics are asymptotic");
    const C c = std::sqrt(x);
    C d = std::log((c + 1.0) / (c - 1.0));
    if (d.real() < 0.0 || (std::abs(d.real()) < 1e-15 && wrap(d.imag()) < 0.0)) d = -d;
    return {std::max(0.0, d.real()), wrap(d.imag())};
}

double bending_angle(double psi, double theta) {
    if (!(psi > 0.0 && psi <= pi / 2)) throw PreconditionError("psi must lie in (0, pi/2]");
    if (!(theta >= 0.0 && theta < pi)) throw PreconditionError("theta must lie in [0, pi)");
    return 2.0 * std::asin(std::sin(psi) * std::sin(theta / 2.0));
}

ComplexLength complex_length_from_trace(C tr) {
    ComplexLength out;
    if (std::abs(tr.imag()) <= 1e-14 * std::max(1.0, std::abs(tr)) && std::abs(tr.real()) <= 2.0) {
        out.kind = std::abs(std::abs(tr.real()) - 2.0) <= 1e-12 ? TraceKind::PARABOLIC
                                                                : TraceKind::ELLIPTIC;
    }
    const C t = (tr.real() < 0.0 || (tr.real() == 0.0 && tr.imag() < 0.0)) ? -tr : tr;
    C cl = 2.0 * std::acosh(t / 2.0);
    if (cl.real() < 0.0) cl = -cl;
    cl = C(cl.real(), wrap(cl.imag()));
    out.value = cl;
    return out;
}

}  // namespace maskit
