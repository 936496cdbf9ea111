#include <doctest.h>

#include <algorithm>

#include <maskit/maskit.hpp>

using namespace maskit;

namespace {

GroupWord W(const char* s) { return parse_word(s); }

double dist(const ParameterPoint& p, cplx t1, cplx t2) {
    return std::max(std::abs(p.tau1 - t1), std::abs(p.tau2 - t2));
}

AffineRow im1_equals(double y) { return {{0, 1, 0, 0}, y}; }

}  // namespace

TEST_SUITE("tracer") {

TEST_CASE("seed_point examples") {
    const auto t = RationalLamination::single(make_curve(W("t")));
    CHECK(dist(seed_point(t, 0.1), {0, 40}, {0, 40}) < 1e-12);
    CHECK(dist(seed_point(t, 2.0), {0, 2}, {0, 2}) < 1e-15);
    const RationalLamination mix({{1, make_curve(W("t"))}, {1, make_curve(W("aTAt"))}});
    CHECK(dist(seed_point(mix, 0.1), {0, 40}, {0, 40.0 / 3}) < 1e-12);
    const auto a = RationalLamination::single(make_curve(W("aBT")));
    CHECK(dist(seed_point(a, 0.5), {2, 8}, {-2, 8}) < 1e-15);
    CHECK_THROWS_AS(seed_point(RationalLamination::single(make_curve(W("aTAt"))), 0.1), PreconditionError);
    CHECK_THROWS_AS(seed_point(t, 0.0), PreconditionError);
}

TEST_CASE("newton_correct examples") {
    const std::vector<GroupWord> cs{W("t"), W("aTAt"), W("bTBt")};
    const auto fixed = newton_correct({{0, 3}, {0, 3}}, cs, {im1_equals(3)});
    CHECK(fixed.residual == 0.0);
    CHECK(dist(fixed.point, {0, 3}, {0, 3}) == 0.0);

    const auto moved = newton_correct({{0.01, 3}, {-0.01, 3}}, cs, {im1_equals(3)});
    CHECK(dist(moved.point, {0, 3}, {0, 3}) < 1e-10);
    CHECK(moved.residual < 1e-10);
}

TEST_CASE("newton_correct with the ray wheel converges from a perturbed start") {
    const std::vector<GroupWord> cs{W("t"), W("aTAt"), W("aBT")};
    const auto r = newton_correct({{0.3, 5.2}, {-0.2, 4.9}}, cs, {im1_equals(5)});
    CHECK(dist(r.point, {0, 5}, {0, 5}) < 1e-10);
    CHECK(r.iterations > 0);
}

TEST_CASE("newton_correct errors") {
    CHECK_THROWS_AS(newton_correct({{0, 3}, {0, 3}}, {W("t"), W("aTAt")}, {im1_equals(3)}), PreconditionError);
    CHECK_THROWS_AS(newton_correct({{0.1, 3}, {0, 3}}, {W("t"), W("t"), W("aTAt")}, {im1_equals(3)}),
                    SingularJacobianError);
}

TEST_CASE("trace_ray(T) runs down the imaginary diagonal to (2i, 2i)") {
    const auto ray = trace_ray(W("t"), 0.1, 100, 0);
    REQUIRE(ray.terminus.kind == TerminusKind::CUSP);
    CHECK(ray.terminus.curve == W("t"));
    CHECK(ray.samples.front().flags == std::vector<std::string>{"seed"});
    CHECK(ray.samples.back().flags == std::vector<std::string>{"cusp"});
    double prev_im = 1e300, prev_arc = -1;
    for (std::size_t k = 0; k < ray.samples.size(); ++k) {
        const auto& s = ray.samples[k];
        CHECK(std::abs(s.point.tau1.real()) < 1e-9);
        CHECK(std::abs(s.point.tau2.real()) < 1e-9);
        CHECK(std::abs(s.point.tau1.imag() - s.point.tau2.imag()) < 1e-9);
        CHECK(s.residual < 1e-10);
        CHECK(s.point.tau1.imag() < prev_im);
        CHECK(s.arclength > prev_arc);
        prev_im = s.point.tau1.imag();
        prev_arc = s.arclength;
        if (k + 1 < ray.samples.size()) CHECK(std::abs(trace(W("t"), s.point).real()) > 2.0);
    }
    CHECK(dist(ray.samples.back().point, {0, 2}, {0, 2}) < 1e-9);
}

TEST_CASE("trace_ray(S1 T) is the T ray shifted by -2 in Re tau1") {
    const auto ray = trace_ray(W("at"), 0.1, 100, 0);
    REQUIRE(ray.terminus.kind == TerminusKind::CUSP);
    CHECK(ray.terminus.curve == W("at"));
    for (const auto& s : ray.samples) {
        CHECK(std::abs(s.point.tau1.real() + 2.0) < 1e-8);
        CHECK(std::abs(s.point.tau2.real()) < 1e-8);
        CHECK(std::abs(s.point.tau1.imag() - s.point.tau2.imag()) < 1e-8);
    }
    CHECK(dist(ray.samples.back().point, {-2, 2}, {0, 2}) < 1e-8);
}

TEST_CASE("trace_ray(S1 S2^-1 T^-1) is the line Re tau = (2, -2)") {
    const auto ray = trace_ray(W("aBT"), 0.1, 100, 0);
    REQUIRE(ray.terminus.kind == TerminusKind::CUSP);
    for (const auto& s : ray.samples) {
        CHECK(std::abs(s.point.tau1.real() - 2.0) < 1e-9);
        CHECK(std::abs(s.point.tau2.real() + 2.0) < 1e-9);
        CHECK(std::abs(s.point.tau1.imag() - s.point.tau2.imag()) < 1e-9);
    }
    CHECK(dist(ray.samples.back().point, {2, 2}, {-2, 2}) < 1e-9);
}

TEST_CASE("trace_ray stops on step and theta limits") {
    const auto short_ray = trace_ray(W("t"), 0.1, 100, 5);
    CHECK(short_ray.samples.size() == 5);
    CHECK(short_ray.terminus.kind == TerminusKind::MAX_STEPS);
    const auto capped = trace_ray(W("t"), 0.1, 0.2, 0);
    CHECK(capped.terminus.kind == TerminusKind::THETA_END);
    CHECK(capped.samples.back().theta_nominal >= 0.2);
    CHECK(capped.samples[capped.samples.size() - 2].theta_nominal < 0.2);
    CHECK(to_string(TerminusKind::THETA_END) == "THETA_END");
}

TEST_CASE("trace_ray preconditions") {
    CHECK_THROWS_AS(trace_ray(W("aTAt"), 0.1, 100, 0), PreconditionError);
    CHECK_THROWS_AS(trace_ray(W("t"), 0.1, 0.1, 0), PreconditionError);
    CHECK_THROWS_AS(trace_ray(W("t"), -1, 1, 0), PreconditionError);
    // Seed at Im = 4/3 is not provably inside.
    CHECK_THROWS_AS(trace_ray(W("t"), 3.0, 100, 0), PreconditionError);
}

TEST_CASE("corrected seeds return to the same branch after a Re perturbation") {
    for (const char* g : {"t", "at", "aBT", "AbT", "tb"}) {
        const Curve c = make_curve(W(g));
        std::vector<GroupWord> cs{c.word};
        for (const auto& w : wheel_search(c.word, 2)) cs.push_back(w.word);
        const ParameterPoint s = seed_point(RationalLamination::single(c), 0.1);
        const AffineRow row = im1_equals(s.tau1.imag());
        const auto base = newton_correct(s, cs, {row});
        for (double d1 : {-0.5, 0.5})
            for (double d2 : {-0.5, 0.5}) {
                const ParameterPoint p{s.tau1 + d1, s.tau2 + d2};
                const auto r = newton_correct(p, cs, {row});
                CHECK_MESSAGE(dist(r.point, base.point.tau1, base.point.tau2) < 1e-8, g);
            }
    }
}

TEST_CASE("eval_E examples") {
    CHECK(eval_E({1, 0, 1, 0}, {{0, 7}, {0, 7}}).value == 0.0);
    CHECK(eval_E({1, -1, 1, 1}, {{2, 3}, {-2, 9}}).value == 0.0);
    CHECK(eval_E({1, 0, 1, 0}, {{1, 2}, {0, 3}}).value == doctest::Approx(3 / std::sqrt(13.0)));
    CHECK_THROWS_AS(eval_E({1, 0, 1, 0}, {{0, 0}, {0, 1}}), PreconditionError);
}

TEST_CASE("trace_plane(T, [S1,T^-1]) stays in Re = 0 and ends on the two cusp curves") {
    const auto plane = trace_plane(W("t"), W("aTAt"), 5, 0.1, 100);
    CHECK_FALSE(plane.exceptional);
    CHECK(plane.normalization == "im_ratio");
    CHECK(plane.rays.size() == 5);
    for (const auto& ray : plane.rays) {
        REQUIRE(ray.terminus.kind == TerminusKind::CUSP);
        for (const auto& s : ray.samples)
            CHECK(std::abs(s.point.tau1.real()) + std::abs(s.point.tau2.real()) < 1e-9);
        const auto& p = ray.samples.back().point;
        if (ray.terminus.curve == W("t")) CHECK(std::abs(p.tau1.imag() * p.tau2.imag() - 4) < 1e-8);
        else CHECK(std::abs(p.tau2.imag() - 1) < 1e-8);
    }
}

TEST_CASE("exceptional pairs are traced and flagged") {
    const Curve a = make_curve(W("tbt")), b = make_curve(W("aBTBT"));
    CHECK(is_exceptional_pair(a.coords, b.coords));
    const auto plane = trace_plane(a.word, b.word, 3, 0.1, 100);
    CHECK(plane.exceptional);
    CHECK(plane.normalization == "re_x1");
    for (const auto& ray : plane.rays) {
        CHECK(ray.terminus.kind == TerminusKind::CUSP);
        for (const auto& s : ray.samples) {
            CHECK(std::find(s.flags.begin(), s.flags.end(), "exceptional") != s.flags.end());
            CHECK(s.residual < 1e-8);
        }
    }
}

TEST_CASE("trace_plane preconditions") {
    CHECK_THROWS_AS(trace_plane(W("t"), W("at"), 3, 0.1, 100), PreconditionError);
    CHECK_THROWS_AS(trace_plane(W("t"), W("aTA"), 3, 0.1, 100), PreconditionError);
    CHECK_THROWS_AS(trace_plane(W("t"), W("aTAt"), 0, 0.1, 100), PreconditionError);
}

TEST_CASE("solve_double_cusp finds (4i, i)") {
    const auto p = solve_double_cusp(W("t"), -1, W("aTAt"), -1, {{0.1, 3.7}, {0.05, 1.2}});
    CHECK(dist(p, {0, 4}, {0, 1}) < 1e-10);
}

TEST_CASE("toy branch systems") {
    for (double eps : {1e-2, 1e-3}) {
        CHECK(toy_branch_check(ToySystem::f1, eps).outcome == ToyOutcome::FAMILY);
        CHECK(toy_branch_check(ToySystem::f2, eps).outcome == ToyOutcome::NONE);
        const auto r = toy_branch_check(ToySystem::f3, eps);
        REQUIRE(r.outcome == ToyOutcome::UNIQUE);
        REQUIRE(r.alphas.size() == 1);
        CHECK(std::abs(r.alphas[0]) < 1e-9);
    }
    CHECK(to_string(ToyOutcome::UNIQUE) == "UNIQUE");
    CHECK(to_string(ToySystem::f2) == "f2");
    CHECK_THROWS_AS(toy_branch_check(ToySystem::f1, 0.0), PreconditionError);
    CHECK_THROWS_AS(toy_branch_check(ToySystem::f1, 0.5), PreconditionError);
}

}  // TEST_SUITE
