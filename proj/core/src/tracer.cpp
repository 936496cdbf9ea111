#include "maskit/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "maskit/arcs.hpp"
#include "maskit/domain.hpp"
#include "maskit/errors.hpp"
#include "solver.hpp"

namespace maskit {

using detail::Vec;

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Vec to_vec(const ParameterPoint& p) {
    Vec u(4);
    u << p.tau1.real(), p.tau1.imag(), p.tau2.real(), p.tau2.imag();
    return u;
}

ParameterPoint to_point(const Vec& u) { return {{u[0], u[1]}, {u[2], u[3]}}; }

struct ReRow {
    GroupWord word;
    double value;
};

// Square system over u = (x1, y1, x2, y2).
struct Rows {
    std::vector<GroupWord> im;
    std::vector<ReRow> re;
    std::vector<AffineRow> affine;

    int count() const { return static_cast<int>(im.size() + re.size() + affine.size()); }
};

// d tr(w) / d tau_1 and d tau_2 by the product rule over the letters.
std::pair<cplx, cplx> trace_gradient(const GroupWord& w, const ParameterPoint& p) {
    const std::size_t n = w.size();
    std::vector<Mat2C> suffix(n + 1);
    for (std::size_t k = n; k-- > 0;) suffix[k] = generator_matrix(w[k], p) * suffix[k + 1];
    cplx d1 = 0.0, d2 = 0.0;
    Mat2C prefix;
    for (std::size_t k = 0; k < n; ++k) {
        const Letter l = w[k];
        if (l.gen == Gen::T) {
            // Derivatives of (1 + t1 t2, t1; t2, 1) and of its inverse (1, -t1; -t2, 1 + t1 t2).
            const Mat2C g1 = l.inverted ? Mat2C{0.0, -1.0, 0.0, p.tau2} : Mat2C{p.tau2, 1.0, 0.0, 0.0};
            const Mat2C g2 = l.inverted ? Mat2C{0.0, 0.0, -1.0, p.tau1} : Mat2C{p.tau1, 0.0, 1.0, 0.0};
            d1 += (prefix * g1 * suffix[k + 1]).trace();
            d2 += (prefix * g2 * suffix[k + 1]).trace();
        }
        prefix = prefix * generator_matrix(l, p);
    }
    return {d1, d2};
}

detail::SquareSystem make_system(const Rows& rows, const TracerConfig& cfg) {
    const double fd = cfg.fd_step;
    detail::SquareSystem sys;
    sys.eval = [&rows](const Vec& u, Vec& f, Vec& scale) {
        const int n = rows.count();
        f.resize(n);
        scale.resize(n);
        const ParameterPoint p = to_point(u);
        int k = 0;
        for (const auto& w : rows.im) {
            const cplx tr = trace(w, p);
            f[k] = tr.imag();
            scale[k++] = std::max(1.0, std::abs(tr));
        }
        for (const auto& r : rows.re) {
            const cplx tr = trace(r.word, p);
            f[k] = tr.real() - r.value;
            scale[k++] = std::max(1.0, std::abs(tr));
        }
        for (const auto& a : rows.affine) {
            double s = 0.0, mag = std::abs(a.rhs);
            for (int j = 0; j < 4; ++j) {
                s += a.a[j] * u[j];
                mag = std::max(mag, std::abs(a.a[j] * u[j]));
            }
            f[k] = s - a.rhs;
            scale[k++] = std::max(1.0, mag);
        }
    };
    sys.fd_step = [fd](const Vec& u, int k) {
        const int base = (k / 2) * 2;
        return fd * std::max(1.0, std::hypot(u[base], u[base + 1]));
    };
    bool short_words = true;
    for (const auto& w : rows.im) short_words = short_words && w.size() <= cfg.symbolic_cap;
    for (const auto& r : rows.re) short_words = short_words && r.word.size() <= cfg.symbolic_cap;
    if (short_words) {
        // Holomorphic traces: d Im g/dx = Im g', d Im g/dy = Re g', d Re g/dx = Re g', d Re g/dy = -Im g'.
        sys.jacobian = [&rows](const Vec& u, detail::Mat& j) {
            const ParameterPoint p = to_point(u);
            int k = 0;
            for (const auto& w : rows.im) {
                const auto [d1, d2] = trace_gradient(w, p);
                j.row(k++) << d1.imag(), d1.real(), d2.imag(), d2.real();
            }
            for (const auto& r : rows.re) {
                const auto [d1, d2] = trace_gradient(r.word, p);
                j.row(k++) << d1.real(), -d1.imag(), d2.real(), -d2.imag();
            }
            for (const auto& a : rows.affine) j.row(k++) << a.a[0], a.a[1], a.a[2], a.a[3];
        };
    }
    return sys;
}

double max_abs_im(const std::vector<GroupWord>& ws, const ParameterPoint& p) {
    double r = 0.0;
    for (const auto& w : ws) r = std::max(r, std::abs(trace(w, p).imag()));
    return r;
}

struct Corrected {
    Vec u;
    int iterations;
};

// A positive max_move rejects corrections that land farther than that from start.
std::optional<Corrected> correct(const Rows& rows, const Vec& start, const TracerConfig& cfg,
                                 double max_move = 0.0) {
    const auto sys = make_system(rows, cfg);
    const auto out = detail::newton(sys, start, cfg.newton_tol, cfg.max_newton_iter);
    if (out.status != detail::NewtonStatus::converged) return std::nullopt;
    if (!(out.x[1] > 0.0) || !(out.x[3] > 0.0)) return std::nullopt;
    if (max_move > 0.0 && (out.x - start).norm() > max_move) return std::nullopt;
    return Corrected{out.x, out.iterations};
}

Vec tangent(const Rows& rows, const Vec& u, const TracerConfig& cfg) {
    const auto sys = make_system(rows, cfg);
    return detail::null_vector(detail::jacobian(sys, u, rows.count()));
}

AffineRow theta_row(double q1, double q2, double theta) {
    return {{0.0, q1, 0.0, q2}, 8.0 / theta};
}

AffineRow arclength_row(const Vec& t, const Vec& u, double delta) {
    AffineRow r;
    for (int j = 0; j < 4; ++j) r.a[j] = t[j];
    r.rhs = t.dot(u) + delta;
    return r;
}

struct Branch {
    std::string label;
    std::vector<GroupWord> constraints;
    std::optional<AffineRow> extra;
    std::vector<GroupWord> monitored;
    double q1 = 1.0, q2 = 1.0;
    std::vector<std::string> flags;
};

class Continuation {
public:
    Continuation(const Branch& br, const TracerConfig& cfg) : br_(br), cfg_(cfg) {
        base_.im = br.constraints;
        if (br.extra) base_.affine.push_back(*br.extra);
    }

    RayPolyline run(const ParameterPoint& seed, double theta_start, double theta_end, int steps);

private:
    double theta_of(const Vec& u) const { return 8.0 / (br_.q1 * u[1] + br_.q2 * u[3]); }

    RaySample sample(const Vec& u, double arclength) const {
        RaySample s;
        s.point = to_point(u);
        s.theta_nominal = theta_of(u);
        s.residual = max_abs_im(br_.constraints, s.point);
        s.arclength = arclength;
        for (const auto& w : br_.monitored) s.traces.emplace_back(w.str(), trace(w, s.point).real());
        s.flags = br_.flags;
        return s;
    }

    Rows with_row(const AffineRow& r) const {
        Rows rows = base_;
        rows.affine.push_back(r);
        return rows;
    }

    // Index of the first monitored curve whose Re tr left |.| > 2 between prev and u.
    std::optional<std::size_t> crossing(const std::vector<double>& prev, const Vec& u) const {
        const ParameterPoint p = to_point(u);
        for (std::size_t i = 0; i < br_.monitored.size(); ++i) {
            if (std::abs(prev[i]) <= 2.0) continue;
            const double r = trace(br_.monitored[i], p).real();
            if (std::abs(r) <= 2.0 || (r > 0) != (prev[i] > 0)) return i;
        }
        return std::nullopt;
    }

    std::vector<double> re_traces(const Vec& u) const {
        std::vector<double> r;
        const ParameterPoint p = to_point(u);
        for (const auto& w : br_.monitored) r.push_back(trace(w, p).real());
        return r;
    }

    const Branch& br_;
    const TracerConfig& cfg_;
    Rows base_;
};

RayPolyline Continuation::run(const ParameterPoint& seed, double theta_start, double theta_end,
                              int steps) {
    RayPolyline ray;
    ray.label = br_.label;
    ray.constraints = br_.constraints;
    ray.monitored = br_.monitored;
    if (steps <= 0 || steps > cfg_.max_steps) steps = cfg_.max_steps;

    auto first = correct(with_row(theta_row(br_.q1, br_.q2, theta_start)), to_vec(seed), cfg_);
    if (!first) throw NumericalError("corrector failed at the seed of " + br_.label);
    Vec u = first->u;
    double arclength = 0.0;
    ray.samples.push_back(sample(u, arclength));
    ray.samples.back().flags.push_back("seed");
    if (membership(to_point(u)).status != Membership::PROVED_INSIDE)
        throw PreconditionError("corrected seed of " + br_.label +
                                " is not provably inside; start at a smaller theta");

    Vec t = tangent(base_, u, cfg_);
    if (br_.q1 * t[1] + br_.q2 * t[3] > 0.0) t = -t;

    double h = cfg_.initial_step;
    int easy = 0;
    while (static_cast<int>(ray.samples.size()) < steps) {
        const double delta = h * std::max(1.0, u.norm());
        auto next = correct(with_row(arclength_row(t, u, delta)), u + delta * t, cfg_, 0.5 * delta);
        if (!next) {
            h *= 0.5;
            easy = 0;
            if (h < cfg_.min_step) {
                ray.terminus.kind = TerminusKind::DIVERGED;
                return ray;
            }
            continue;
        }

        const auto prev = re_traces(u);
        if (auto hit = crossing(prev, next->u)) {
            // Bisection on the arclength parameter of this step.
            double lo = 0.0, hi = delta;
            Vec u_lo = u, u_hi = next->u;
            std::size_t idx = *hit;
            auto gap = [&](const Vec& v, std::size_t i) {
                return std::abs(std::abs(trace(br_.monitored[i], to_point(v)).real()) - 2.0);
            };
            for (int it = 0; it < 200 && gap(u_hi, idx) >= 1e-3 * cfg_.cusp_tol; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo && mid < hi)) break;
                auto m = correct(with_row(arclength_row(t, u, mid)), u + mid * t, cfg_,
                                 std::max(0.5 * delta, 1e-12));
                if (!m) break;
                if (auto c = crossing(prev, m->u)) {
                    hi = mid;
                    u_hi = m->u;
                    idx = *c;
                } else {
                    lo = mid;
                    u_lo = m->u;
                }
            }
            const bool use_lo = gap(u_lo, idx) < gap(u_hi, idx);
            const Vec& uc = use_lo ? u_lo : u_hi;
            ray.samples.push_back(sample(uc, arclength + (use_lo ? lo : hi)));
            ray.samples.back().flags.push_back("cusp");
            ray.terminus = {TerminusKind::CUSP, br_.monitored[idx]};
            return ray;
        }

        arclength += delta;
        u = next->u;
        ray.samples.push_back(sample(u, arclength));
        if (ray.samples.back().theta_nominal >= theta_end) {
            ray.terminus.kind = TerminusKind::THETA_END;
            return ray;
        }

        Vec tn = tangent(base_, u, cfg_);
        if (tn.dot(t) < 0.0) tn = -tn;
        t = tn;
        if (next->iterations <= 3) {
            if (++easy >= 3) {
                h = std::min(h * 1.3, cfg_.max_step);
                easy = 0;
            }
        } else {
            easy = 0;
        }
    }
    ray.terminus.kind = TerminusKind::MAX_STEPS;
    return ray;
}

void check_theta(double theta_start, double theta_end) {
    if (!(theta_start > 0.0)) throw PreconditionError("theta_start must be positive");
    if (!(theta_end > theta_start)) throw PreconditionError("theta_end must exceed theta_start");
}

}  // namespace

NewtonResult newton_correct(const ParameterPoint& p, const std::vector<GroupWord>& constraints,
                            const std::vector<AffineRow>& normalizations, const TracerConfig& cfg) {
    if (constraints.size() + normalizations.size() != 4)
        throw PreconditionError("constraints and normalization rows must total 4");
    Rows rows{constraints, {}, normalizations};
    const auto sys = make_system(rows, cfg);
    const auto out = detail::newton(sys, to_vec(p), cfg.newton_tol, cfg.max_newton_iter);
    switch (out.status) {
        case detail::NewtonStatus::converged: break;
        case detail::NewtonStatus::singular:
            throw SingularJacobianError("singular Jacobian in newton_correct");
        case detail::NewtonStatus::no_convergence:
            throw NumericalError("newton_correct did not converge in " +
                                 std::to_string(cfg.max_newton_iter) + " iterations");
    }
    const ParameterPoint q = to_point(out.x);
    return {q, max_abs_im(constraints, q), out.iterations};
}

ParameterPoint seed_point(const RationalLamination& xi, double theta) {
    if (!(theta > 0.0)) throw PreconditionError("theta must be positive");
    if (!xi.admissible()) throw PreconditionError("lamination " + xi.str() + " is not admissible");
    const auto c = xi.coords();
    const double q1 = to_double(c[0]), p1 = to_double(c[1]);
    const double q2 = to_double(c[2]), p2 = to_double(c[3]);
    return {{-2.0 * p1 / q1, 4.0 / (theta * q1)}, {-2.0 * p2 / q2, 4.0 / (theta * q2)}};
}

std::string to_string(TerminusKind k) {
    switch (k) {
        case TerminusKind::CUSP: return "CUSP";
        case TerminusKind::MAX_STEPS: return "MAX_STEPS";
        case TerminusKind::DIVERGED: return "DIVERGED";
        case TerminusKind::THETA_END: return "THETA_END";
    }
    return "MAX_STEPS";
}

RayPolyline trace_ray(const GroupWord& gamma, double theta_start, double theta_end, int steps,
                      const TracerConfig& cfg) {
    check_theta(theta_start, theta_end);
    const Curve g = make_curve(gamma);
    if (!is_admissible(g.coords))
        throw PreconditionError(g.word.str() + " " + g.coords.str() + " is not admissible");

    Branch br;
    br.label = g.word.str();
    br.constraints.push_back(g.word);
    for (const auto& w : wheel_search(g.word, 2, cfg.wheel_depth)) br.constraints.push_back(w.word);
    br.monitored = br.constraints;
    br.q1 = static_cast<double>(g.coords.q1);
    br.q2 = static_cast<double>(g.coords.q2);

    const ParameterPoint seed = seed_point(RationalLamination::single(g), theta_start);
    return Continuation(br, cfg).run(seed, theta_start, theta_end, steps);
}

PlaneTrace trace_plane(const GroupWord& gamma1, const GroupWord& gamma2, int s_grid,
                       double theta_start, double theta_end, const TracerConfig& cfg) {
    check_theta(theta_start, theta_end);
    if (s_grid < 1) throw PreconditionError("plane grid must be at least 1");
    const Curve c1 = make_curve(gamma1), c2 = make_curve(gamma2);
    if (canonical_cyclic(c1.word) == canonical_cyclic(c2.word))
        throw PreconditionError("plane needs two distinct curves");
    if (!disjoint(c1.word, c2.word))
        throw PreconditionError(c1.word.str() + " and " + c2.word.str() + " are not disjoint");

    PlaneTrace plane;
    plane.exceptional = is_exceptional_pair(c1.coords, c2.coords);

    auto xi_at = [&](const Rational& s) {
        return RationalLamination({{s, c1}, {1 - s, c2}});
    };

    // Exceptional pairs: hold the asymptotic Re part on the axis that varies most.
    int re_axis = 0;
    if (plane.exceptional) {
        const auto a = xi_at(Rational(1, 1000)).coords();
        const auto b = xi_at(Rational(999, 1000)).coords();
        auto xstar = [](const RationalCoords& c, int i) {
            return to_double(-2 * c[2 * i + 1] / c[2 * i]);
        };
        double best = 0.0;
        for (int i = 0; i < 2; ++i) {
            if (a[2 * i] == 0 || b[2 * i] == 0) continue;
            const double var = std::abs(xstar(a, i) - xstar(b, i));
            if (var > best + 1e-12) {
                best = var;
                re_axis = i + 1;
            }
        }
        if (re_axis == 0)
            throw PreconditionError("exceptional pair with constant asymptotic Re parts");
        plane.normalization = re_axis == 1 ? "re_x1" : "re_x2";
    } else {
        plane.normalization = "im_ratio";
    }

    std::vector<Rational> admissible_s;
    for (int k = 1; k <= s_grid; ++k) {
        const Rational s(k, s_grid + 1);
        if (xi_at(s).admissible()) admissible_s.push_back(s);
    }
    if (admissible_s.empty()) throw PreconditionError("no admissible lamination on the grid");

    for (const auto& s : admissible_s) {
        const auto xi = xi_at(s);
        const auto c = xi.coords();
        Branch br;
        br.label = "s=" + rational_str(s);
        br.constraints = {c1.word, c2.word};
        br.monitored = br.constraints;
        br.q1 = to_double(c[0]);
        br.q2 = to_double(c[2]);
        AffineRow row;
        if (plane.exceptional) {
            const int i = re_axis - 1;
            row.a[2 * i] = 1.0;
            row.rhs = to_double(-2 * c[2 * i + 1] / c[2 * i]);
            br.flags.push_back("exceptional");
        } else {
            const double n = std::hypot(br.q1, br.q2);
            row.a = {0.0, br.q1 / n, 0.0, -br.q2 / n};
        }
        br.extra = row;
        plane.s_values.push_back(to_double(s));
        plane.rays.push_back(Continuation(br, cfg).run(seed_point(xi, theta_start), theta_start,
                                                        theta_end, 0));
    }

    auto cusp_sign = [](const RayPolyline& r) {
        const auto& last = r.samples.back();
        for (const auto& [w, v] : last.traces)
            if (w == r.terminus.curve.str()) return v < 0.0 ? -1.0 : 1.0;
        return 1.0;
    };
    for (std::size_t k = 0; k + 1 < plane.rays.size(); ++k) {
        const auto& l = plane.rays[k];
        const auto& r = plane.rays[k + 1];
        if (l.terminus.kind != TerminusKind::CUSP || r.terminus.kind != TerminusKind::CUSP) continue;
        if (l.terminus.curve == r.terminus.curve) continue;
        const auto& pl = l.samples.back().point;
        const auto& pr = r.samples.back().point;
        const ParameterPoint guess{0.5 * (pl.tau1 + pr.tau1), 0.5 * (pl.tau2 + pr.tau2)};
        PlaneCorner corner;
        corner.first = l.terminus.curve;
        corner.second = r.terminus.curve;
        corner.s_left = plane.s_values[k];
        corner.s_right = plane.s_values[k + 1];
        corner.point = solve_double_cusp(corner.first, cusp_sign(l), corner.second, cusp_sign(r),
                                         guess, cfg);
        if (membership(corner.point).status == Membership::PROVED_OUTSIDE) continue;
        const bool dup = std::any_of(plane.corners.begin(), plane.corners.end(), [&](const auto& o) {
            return std::abs(o.point.tau1 - corner.point.tau1) + std::abs(o.point.tau2 - corner.point.tau2) < 1e-8;
        });
        if (!dup) plane.corners.push_back(corner);
    }
    return plane;
}

ParameterPoint solve_double_cusp(const GroupWord& g1, double sign1, const GroupWord& g2,
                                 double sign2, const ParameterPoint& guess, const TracerConfig& cfg) {
    Rows rows;
    rows.im = {g1, g2};
    rows.re = {{g1, sign1 < 0 ? -2.0 : 2.0}, {g2, sign2 < 0 ? -2.0 : 2.0}};
    const auto sys = make_system(rows, cfg);
    const auto out = detail::newton(sys, to_vec(guess), cfg.newton_tol, cfg.max_newton_iter);
    if (out.status == detail::NewtonStatus::singular)
        throw SingularJacobianError("singular Jacobian at the double cusp of " + g1.str() + ", " +
                                    g2.str());
    if (out.status != detail::NewtonStatus::converged)
        throw NumericalError("double cusp of " + g1.str() + ", " + g2.str() + " did not converge");
    return to_point(out.x);
}

EDiagnostic eval_E(const CanonicalCoords& c, const ParameterPoint& p) {
    require_upper(p);
    const double x1 = p.tau1.real(), y1 = p.tau1.imag();
    const double x2 = p.tau2.real(), y2 = p.tau2.imag();
    const double rho = std::hypot(y1, y2);
    const double e1 = y1 / rho, e2 = y2 / rho;
    return {(static_cast<double>(c.q1) * x1 + 2.0 * static_cast<double>(c.p1)) * e2 +
            (static_cast<double>(c.q2) * x2 + 2.0 * static_cast<double>(c.p2)) * e1};
}

}  // namespace maskit
