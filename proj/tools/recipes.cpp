#include "recipes.hpp"

#include <algorithm>
#include <cmath>

#include <maskit/errors.hpp>

namespace maskit::cli {

namespace {

constexpr double theta_end = 100.0;

void add(RecipeResult& r, std::string name, double value, double tol) {
    r.checks.push_back({std::move(name), value, tol, value < tol});
}

double dist(const ParameterPoint& p, cplx t1, cplx t2) {
    return std::max(std::abs(p.tau1 - t1), std::abs(p.tau2 - t2));
}

bool is_cusp_of(const RayPolyline& ray, const std::string& word) {
    return ray.terminus.kind == TerminusKind::CUSP && ray.terminus.curve.str() == word;
}

// A straight ray on Re tau = (x1, x2), Im tau1 = Im tau2, ending where gamma is parabolic.
RecipeResult straight_ray(const std::string& name, const std::string& word, double x1, double x2,
                          double theta, const TracerConfig& cfg) {
    RecipeResult r{name, {}, {}, {}};
    const auto ray = trace_ray(parse_word(word), theta, theta_end, 0, cfg);
    double dev = 0.0, res = 0.0;
    for (const auto& s : ray.samples) {
        dev = std::max({dev, std::abs(s.point.tau1.real() - x1), std::abs(s.point.tau2.real() - x2),
                        std::abs(s.point.tau1.imag() - s.point.tau2.imag())});
        res = std::max(res, s.residual);
    }
    add(r, "line deviation", dev, 1e-9);
    add(r, "max residual", res, 1e-10);
    add(r, "terminus is CUSP(" + word + ")", is_cusp_of(ray, word) ? 0.0 : 1.0, 0.5);
    add(r, "cusp distance", dist(ray.samples.back().point, {x1, 2.0}, {x2, 2.0}), 1e-9);
    r.rays.push_back(ray);
    return r;
}

// The plane tau2 = -conj(tau1) spanned by T and a curve with coordinates (1,-+1,1,+-1);
// the two boundary arcs are |tau1| = 2 and |tau1 - c| = 2.
RecipeResult mirror_plane(const std::string& name, const std::string& word, double c,
                          double theta, const TracerConfig& cfg) {
    RecipeResult r{name, {}, {}, {}};
    const auto plane = trace_plane(parse_word("t"), parse_word(word), 19, theta, theta_end, cfg);
    double off = 0.0, arc = 0.0;
    for (const auto& ray : plane.rays) {
        for (const auto& s : ray.samples)
            off = std::max(off, std::abs(s.point.tau2 + std::conj(s.point.tau1)));
        const cplx t1 = ray.samples.back().point.tau1;
        if (is_cusp_of(ray, "t")) arc = std::max(arc, std::abs(std::abs(t1) - 2.0));
        else if (is_cusp_of(ray, word)) arc = std::max(arc, std::abs(std::abs(t1 - c) - 2.0));
        else arc = std::max(arc, 1.0);
    }
    add(r, "distance from tau2 = -conj(tau1)", off, 1e-8);
    add(r, "cusp arcs |tau1| = 2, |tau1 - " + std::to_string(static_cast<int>(c)) + "| = 2", arc, 1e-8);
    const cplx expect(c / 2.0, std::sqrt(3.0));
    double best = 1.0;
    for (const auto& k : plane.corners) best = std::min(best, std::abs(k.point.tau1 - expect));
    add(r, "corner distance", best, 1e-8);
    r.rays = plane.rays;
    r.corners = plane.corners;
    return r;
}

RecipeResult degenerate_plane(double theta, const TracerConfig& cfg) {
    RecipeResult r{"ex4", {}, {}, {}};
    const auto plane = trace_plane(parse_word("t"), parse_word("aTAt"), 59, theta, theta_end, cfg);
    double re = 0.0, hyper = 0.0, line = 0.0;
    int on_hyper = 0;
    for (const auto& ray : plane.rays) {
        for (const auto& s : ray.samples)
            re = std::max({re, std::abs(s.point.tau1.real()), std::abs(s.point.tau2.real())});
        const auto& p = ray.samples.back().point;
        if (is_cusp_of(ray, "t")) {
            hyper = std::max(hyper, std::abs(p.tau1.imag() * p.tau2.imag() - 4.0));
            ++on_hyper;
        } else if (is_cusp_of(ray, "aTAt")) {
            line = std::max(line, std::abs(p.tau2.imag() - 1.0));
        } else {
            line = std::max(line, 1.0);
        }
    }
    add(r, "distance from Re tau1 = Re tau2 = 0", re, 1e-9);
    add(r, "T cusps off Im tau1 Im tau2 = 4", hyper, 1e-8);
    add(r, "T cusp samples short of 20", on_hyper >= 20 ? 0.0 : 20.0 - on_hyper, 0.5);
    add(r, "[S1,T^-1] cusps off Im tau2 = 1", line, 1e-8);
    double best = 1.0;
    for (const auto& k : plane.corners) best = std::min(best, dist(k.point, {0, 4}, {0, 1}));
    add(r, "corner distance", best, 1e-9);
    r.rays = plane.rays;
    r.corners = plane.corners;
    return r;
}

}  // namespace

bool RecipeResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<std::string> recipe_names() { return {"ex1", "ex2", "ex3", "ex3a", "ex4"}; }

RecipeResult run_recipe(const std::string& name, double seed_theta, const TracerConfig& cfg) {
    if (name == "ex1") return straight_ray(name, "t", 0.0, 0.0, seed_theta, cfg);
    if (name == "ex2") return straight_ray(name, "aBT", 2.0, -2.0, seed_theta, cfg);
    if (name == "ex3") return mirror_plane(name, "aBT", 2.0, seed_theta, cfg);
    if (name == "ex3a") return mirror_plane(name, "AbT", -2.0, seed_theta, cfg);
    if (name == "ex4") return degenerate_plane(seed_theta, cfg);
    throw PreconditionError("unknown example " + name + " (expected ex1, ex2, ex3, ex3a or ex4)");
}

}  // namespace maskit::cli
