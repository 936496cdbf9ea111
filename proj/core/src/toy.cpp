#include <algorithm>
#include <cmath>
#include <complex>

#include "maskit/errors.hpp"
#include "maskit/tracer.hpp"
#include "solver.hpp"

namespace maskit {

std::string to_string(ToySystem s) {
    switch (s) {
        case ToySystem::f1: return "f1";
        case ToySystem::f2: return "f2";
        case ToySystem::f3: return "f3";
    }
    return "f1";
}

std::string to_string(ToyOutcome o) {
    switch (o) {
        case ToyOutcome::FAMILY: return "FAMILY";
        case ToyOutcome::NONE: return "NONE";
        case ToyOutcome::UNIQUE: return "UNIQUE";
        case ToyOutcome::MULTIPLE: return "MULTIPLE";
    }
    return "NONE";
}

namespace {

using C = std::complex<double>;

C toy_value(ToySystem which, C z1, C z2) {
    const C f0 = z1 * z2;
    switch (which) {
        case ToySystem::f1: return f0 * (1.0 - z1 + z2 + z1 * z2);
        case ToySystem::f2: return f0 * (1.0 - z1 - z2 + z1 * z2);
        case ToySystem::f3: return f0 * (1.0 - z1 + z2 + z1 * z1);
    }
    return f0;
}

// Im f / |f| on the curve z1 = eps i e^{i alpha}, z2 = eps i e^{-i alpha}; Im f0 vanishes there.
double relative_im(ToySystem which, double eps, double alpha) {
    const C i(0.0, 1.0);
    const C z1 = eps * i * std::exp(i * alpha);
    const C z2 = eps * i * std::exp(-i * alpha);
    const C f = toy_value(which, z1, z2);
    return f.imag() / std::abs(f);
}

}  // namespace

ToyReport toy_branch_check(ToySystem which, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 0.1) throw PreconditionError("epsilon must lie in (0, 0.1]");
    ToyReport rep;
    rep.which = which;
    rep.epsilon = epsilon;

    constexpr int half = 300;
    const double span = 3.0 * epsilon;
    std::vector<double> alpha(2 * half + 1), g(2 * half + 1);
    for (int k = -half; k <= half; ++k) {
        alpha[k + half] = span * k / half;
        g[k + half] = relative_im(which, epsilon, alpha[k + half]);
        rep.max_relative_residual = std::max(rep.max_relative_residual, std::abs(g[k + half]));
    }
    if (rep.max_relative_residual < 1e-12) {
        rep.outcome = ToyOutcome::FAMILY;
        return rep;
    }

    detail::SquareSystem sys;
    sys.eval = [&](const detail::Vec& x, detail::Vec& f, detail::Vec& s) {
        f.resize(1);
        s.resize(1);
        f[0] = relative_im(which, epsilon, x[0]);
        s[0] = 1.0;
    };
    sys.fd_step = [&](const detail::Vec&, int) { return 1e-6 * epsilon; };

    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        if (g[k] == 0.0 || g[k] * g[k + 1] < 0.0) {
            detail::Vec x(1);
            x[0] = g[k] == 0.0 ? alpha[k] : alpha[k] - g[k] * (alpha[k + 1] - alpha[k]) / (g[k + 1] - g[k]);
            const auto out = detail::newton(sys, x, 1e-14, 50);
            const double root = out.status == detail::NewtonStatus::converged ? out.x[0] : x[0];
            const bool seen = std::any_of(rep.alphas.begin(), rep.alphas.end(),
                                          [&](double a) { return std::abs(a - root) < 1e-6 * epsilon; });
            if (!seen) rep.alphas.push_back(root);
        }
    }
    if (g.back() == 0.0 && rep.alphas.empty()) rep.alphas.push_back(alpha.back());
    rep.outcome = rep.alphas.empty()     ? ToyOutcome::NONE
                  : rep.alphas.size() == 1 ? ToyOutcome::UNIQUE
                                           : ToyOutcome::MULTIPLE;
    return rep;
}

}  // namespace maskit
