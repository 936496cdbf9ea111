#include <doctest.h>

#include <maskit/maskit.hpp>

#include "helpers.hpp"

using namespace maskit;

TEST_SUITE("domain") {

TEST_CASE("membership examples") {
    CHECK(membership({{0, 2.5}, {0, 2.5}}).status == Membership::PROVED_INSIDE);
    CHECK(membership({{0, 0.4}, {0, 100}}).status == Membership::PROVED_OUTSIDE);
    CHECK(membership({{0, 1.5}, {0, 2}}).status == Membership::UNKNOWN);
    CHECK(membership({{0, 0.9}, {0, 0.9}}).status == Membership::PROVED_OUTSIDE);
    CHECK(membership({{3, 0.8}, {-1, 10}}).status == Membership::UNKNOWN);
    // Boundary of the sufficient region is not included.
    CHECK(membership({{0, 2}, {0, 2}}).status == Membership::UNKNOWN);
    CHECK(membership({{0, 2.5}, {0, 2.5}}).witness.find("> 4") != std::string::npos);
    CHECK(to_string(Membership::UNKNOWN) == "UNKNOWN");
}

TEST_CASE("membership rejects the lower half-plane") {
    CHECK_THROWS_AS(membership({{0, 0}, {0, 1}}), PreconditionError);
    CHECK_THROWS_AS(membership({{0, 1}, {0, -1}}), PreconditionError);
    CHECK_THROWS_AS(require_upper({{0, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("verdict regions follow the two bounds and are monotone in Im") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> y(0.05, 6.0), step(0.0, 3.0);
    for (int n = 0; n < 5000; ++n) {
        const double y1 = y(rng), y2 = y(rng);
        const auto v = membership({{0.3, y1}, {-1.0, y2}}).status;
        const bool inside = y1 > 1 && y2 > 1 && y1 * y2 > 4;
        const bool outside = y1 < 0.5 || y2 < 0.5 || y1 * y2 < 1;
        CHECK(v == (inside ? Membership::PROVED_INSIDE : outside ? Membership::PROVED_OUTSIDE : Membership::UNKNOWN));
        if (v == Membership::PROVED_INSIDE)
            CHECK(membership({{0.3, y1 + step(rng)}, {-1.0, y2 + step(rng)}}).status == Membership::PROVED_INSIDE);
    }
}

TEST_CASE("verdict is invariant under Dehn twists") {
    std::mt19937_64 rng(42);
    for (int n = 0; n < 200; ++n) {
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 0.1, 5), testing::random_cplx(rng, -3, 3, 0.1, 5)};
        for (int axis : {1, 2})
            CHECK(membership(dehn_twist(p, axis, n % 7 - 3)).status == membership(p).status);
    }
}

TEST_CASE("dehn_twist examples") {
    const ParameterPoint p = dehn_twist({{0, 2}, {0, 2}}, 1, 1);
    CHECK(p.tau1 == cplx(2, 2));
    CHECK(p.tau2 == cplx(0, 2));
    const ParameterPoint q = dehn_twist({{1, 2}, {3, 4}}, 2, 0);
    CHECK(q.tau1 == cplx(1, 2));
    CHECK(q.tau2 == cplx(3, 4));
    CHECK(dehn_twist({{0, 2}, {0, 2}}, 2, -3).tau2 == cplx(-6, 2));
    CHECK_THROWS_AS(dehn_twist({{0, 2}, {0, 2}}, 0, 1), PreconditionError);
}

TEST_CASE("dehn_twist matches the polynomial shift") {
    std::mt19937_64 rng(43);
    const BiPoly tr = trace_poly(parse_word("aBTat"));
    for (int n = 0; n < 20; ++n) {
        const ParameterPoint p{testing::random_cplx(rng, -2, 2, 1, 3), testing::random_cplx(rng, -2, 2, 1, 3)};
        const ParameterPoint q = dehn_twist(p, 1, 1);
        const cplx lhs = tr.eval(q.tau1, q.tau2), rhs = substitute_shift(tr, 1, 2).eval(p.tau1, p.tau2);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("fundamental_disks examples") {
    const auto d = fundamental_disks({{0, 4}, {0, 2}});
    CHECK(d.radius == doctest::Approx(0.5));
    CHECK(std::abs(d.b2_center - cplx(0, 0.5)) < 1e-15);
    CHECK(std::abs(d.b3_center - cplx(0, 3.5)) < 1e-15);
    CHECK(fundamental_disks({{0, 1}, {0, 1e12}}).radius < 1e-11);
    CHECK_THROWS_AS(fundamental_disks({{0, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("T maps the boundary of B2 onto the boundary of B3") {
    std::mt19937_64 rng(44);
    for (int n = 0; n < 50; ++n) {
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 1, 10), testing::random_cplx(rng, -3, 3, 1, 10)};
        const auto d = fundamental_disks(p);
        const Mat2C t = evaluate(parse_word("t"), p);
        for (int k = 0; k < 32; ++k) {
            const double a = 2 * M_PI * (k + 0.5) / 32;
            const cplx z = d.b2_center + d.radius * std::polar(1.0, a);
            CHECK(std::abs(std::abs(t.apply(z) - d.b3_center) - d.radius) < 1e-9);
            // The exterior goes inside.
            const cplx out = d.b2_center + 1.5 * d.radius * std::polar(1.0, a);
            CHECK(std::abs(t.apply(out) - d.b3_center) < d.radius);
        }
    }
}

}  // TEST_SUITE
