#include <doctest.h>

#include <maskit/maskit.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace maskit;

namespace {

// Letter order a A b B t T as digits, so string order matches GroupWord order.
std::string digits(const std::string& w) {
    std::string out;
    for (char c : w) out.push_back(static_cast<char>('0' + std::string(testing::alphabet).find(c)));
    return out;
}

cplx K(cplx z) { return -1.0 / std::conj(z); }

}  // namespace

TEST_SUITE("word") {

TEST_CASE("parse_word reads the alphabet and reduces") {
    CHECK(parse_word("t").str() == "t");
    CHECK(parse_word("aA").empty());
    CHECK(parse_word("aTAt") == GroupWord{S1, Tinv, S1inv, Tl});
    CHECK(parse_word("  a \tT A t ").str() == "aTAt");
    CHECK(parse_word("abBA").empty());
    CHECK(parse_word("").empty());
}

TEST_CASE("parse_word reports the byte offset of a bad character") {
    try {
        parse_word("aT x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(e.kind() == ErrorKind::usage);
    }
    CHECK_THROWS_AS(parse_word("a\nb"), ParseError);
    CHECK_THROWS_AS(parse_word("s1"), ParseError);
}

TEST_CASE("cyclic_reduce examples") {
    CHECK(cyclic_reduce(GroupWord{S1, Tl, S1inv}) == GroupWord{Tl});
    CHECK(cyclic_reduce(GroupWord{Tl}) == GroupWord{Tl});
    const auto r = cyclic_reduce(GroupWord{S1inv, Tl, S1, S1});
    CHECK(oracle::is_rotation(r.str(), "ta"));
    CHECK(cyclic_reduce(GroupWord{}).empty());
}

TEST_CASE("cyclic_reduce agrees with brute force over cyclic conjugates") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 2000; ++n) {
        const std::string w = testing::random_word(rng, 1 + n % 12);
        const GroupWord c = cyclic_reduce(parse_word(w));
        CHECK(c.is_cyclically_reduced());
        REQUIRE(c.size() == oracle::cyclic_length(w));
        bool found = false;
        for (const auto& r : oracle::reduced_rotations(w))
            if (r.size() == c.size() && oracle::is_rotation(c.str(), r)) found = true;
        CHECK_MESSAGE(found, w);
    }
}

TEST_CASE("canonical_cyclic is the least rotation of the word or its inverse") {
    std::mt19937_64 rng(12);
    for (int n = 0; n < 500; ++n) {
        const GroupWord c = cyclic_reduce(parse_word(testing::random_word(rng, 1 + n % 10)));
        if (c.empty()) continue;
        const std::string got = canonical_cyclic(c).str();
        // Compare in letter-index order.
        std::string best = digits(c.str());
        for (const std::string& x : {c.str(), oracle::inverse(c.str())})
            for (std::size_t k = 0; k < x.size(); ++k) best = std::min(best, digits(oracle::rotate(x, k)));
        CHECK(digits(got) == best);
    }
}

TEST_CASE("word algebra") {
    const GroupWord w = parse_word("aTbt");
    CHECK((w * w.inverse()).empty());
    CHECK(w.inverse().str() == "TBtA");
    CHECK(w.rotated(2).str() == "btaT");
    CHECK_FALSE(parse_word("aTA").is_cyclically_reduced());
}

TEST_CASE("evaluate examples") {
    const ParameterPoint p{{0.3, 1.7}, {-0.4, 2.2}};
    const Mat2C id = evaluate(GroupWord{}, p);
    CHECK(id.a == cplx(1));
    CHECK(id.b == cplx(0));
    CHECK(id.c == cplx(0));
    CHECK(id.d == cplx(1));
    const Mat2C t = evaluate(parse_word("t"), p);
    CHECK(std::abs(t.a - (1.0 + p.tau1 * p.tau2)) < 1e-15);
    CHECK(t.b == p.tau1);
    CHECK(t.c == p.tau2);
    CHECK(t.d == cplx(1));
    const cplx tr = trace(parse_word("aTAt"), p);
    CHECK(std::abs(tr - (2.0 + 4.0 * p.tau2 * p.tau2)) < 1e-12);
}

TEST_CASE("trace examples") {
    CHECK(std::abs(trace(parse_word("t"), {{0, 1}, {0, 1}}) - cplx(1)) < 1e-15);
    CHECK(trace(GroupWord{}, {{0, 1}, {0, 1}}) == cplx(2));
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        const cplx t1 = testing::random_cplx(rng, -3, 3, 0.1, 3), t2 = testing::random_cplx(rng, -3, 3, 0.1, 3);
        const cplx expect = t1 * t2 + 2.0 * t1 - 2.0 * t2 - 2.0;
        CHECK(std::abs(trace(parse_word("aBT"), {t1, t2}) - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("evaluate matches an independent long double product") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 300; ++n) {
        const std::string w = testing::random_word(rng, 1 + n % 20);
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 0.1, 3), testing::random_cplx(rng, -3, 3, 0.1, 3)};
        const Mat2C m = evaluate(parse_word(w), p);
        const auto o = oracle::eval(w, p.tau1, p.tau2);
        const double s = testing::entry_scale(m);
        CHECK(std::abs(m.a - cplx(o.a)) < 1e-12 * s);
        CHECK(std::abs(m.b - cplx(o.b)) < 1e-12 * s);
        CHECK(std::abs(m.c - cplx(o.c)) < 1e-12 * s);
        CHECK(std::abs(m.d - cplx(o.d)) < 1e-12 * s);
    }
}

TEST_CASE("determinant stays 1 up to rounding of the entries") {
    // Entries of a length-64 word at |tau| <= 10 reach 1e100, so the error of
    // ad - bc is measured against |ad| + |bc|.
    std::mt19937_64 rng(5);
    for (int n = 0; n < 500; ++n) {
        const std::string w = testing::random_word(rng, 1 + n % 64);
        const ParameterPoint p{testing::random_cplx(rng, -7, 7, -7, 7), testing::random_cplx(rng, -7, 7, -7, 7)};
        const Mat2C m = evaluate(parse_word(w), p);
        const double s = std::max(1.0, std::abs(m.a * m.d) + std::abs(m.b * m.c));
        CHECK(std::abs(m.det() - 1.0) <= 1e-12 * s);
    }
}

TEST_CASE("determinant is 1 to 1e-12 absolutely for short words at small tau") {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 500; ++n) {
        const std::string w = testing::random_word(rng, 1 + n % 4);
        const ParameterPoint p{testing::random_cplx(rng, -1, 1, 0.5, 2), testing::random_cplx(rng, -1, 1, 0.5, 2)};
        CHECK(std::abs(evaluate(parse_word(w), p).det() - 1.0) <= 1e-12);
    }
}

TEST_CASE("trace is invariant under rotation and inversion") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 300; ++n) {
        const GroupWord w = cyclic_reduce(parse_word(testing::random_word(rng, 2 + n % 14)));
        if (w.empty()) continue;
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 0.1, 3), testing::random_cplx(rng, -3, 3, 0.1, 3)};
        const Mat2C m = evaluate(w, p);
        const double s = testing::entry_scale(m);
        const cplx tr = m.trace();
        for (std::size_t k = 1; k < w.size(); ++k) CHECK(std::abs(trace(w.rotated(k), p) - tr) < 1e-10 * s);
        CHECK(std::abs(trace(w.inverse(), p) - tr) < 1e-10 * s);
    }
}

TEST_CASE("twist automorphisms shift the parameters by 2") {
    std::mt19937_64 rng(8);
    const auto d1 = twist_sigma1(), d2 = twist_sigma2();
    CHECK(d1.apply(parse_word("t")).str() == "at");
    CHECK(d2.apply(parse_word("t")).str() == "tb");
    for (int n = 0; n < 200; ++n) {
        const GroupWord w = parse_word(testing::random_word(rng, 1 + n % 10));
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 0.1, 3), testing::random_cplx(rng, -3, 3, 0.1, 3)};
        const Mat2C lhs1 = evaluate(d1.apply(w), p);
        const Mat2C rhs1 = evaluate(w, {p.tau1 + 2.0, p.tau2});
        const Mat2C lhs2 = evaluate(d2.apply(w), p);
        const Mat2C rhs2 = evaluate(w, {p.tau1, p.tau2 + 2.0});
        const double s1 = testing::entry_scale(rhs1), s2 = testing::entry_scale(rhs2);
        CHECK(std::abs(lhs1.a - rhs1.a) + std::abs(lhs1.b - rhs1.b) + std::abs(lhs1.c - rhs1.c) +
                  std::abs(lhs1.d - rhs1.d) < 1e-12 * s1);
        CHECK(std::abs(lhs2.a - rhs2.a) + std::abs(lhs2.b - rhs2.b) + std::abs(lhs2.c - rhs2.c) +
                  std::abs(lhs2.d - rhs2.d) < 1e-12 * s2);
    }
}

TEST_CASE("twists compose with their inverses to the identity") {
    std::mt19937_64 rng(9);
    for (const auto& [f, g] : {std::pair{twist_sigma1(1), twist_sigma1(-1)}, std::pair{twist_sigma2(1), twist_sigma2(-1)},
                               std::pair{twist_t(1), twist_t(-1)}}) {
        for (int n = 0; n < 50; ++n) {
            const GroupWord w = parse_word(testing::random_word(rng, 1 + n % 9));
            CHECK(g.apply(f.apply(w)) == w);
        }
    }
}

TEST_CASE("the involution K(z) = -1/conj(z) conjugates S1 to S2^-1 and T to T^-1 at (conj tau2, conj tau1)") {
    std::mt19937_64 rng(10);
    for (int n = 0; n < 20; ++n) {
        const ParameterPoint p{testing::random_cplx(rng, -3, 3, 0.2, 4), testing::random_cplx(rng, -3, 3, 0.2, 4)};
        const cplx q1 = std::conj(p.tau2), q2 = std::conj(p.tau1);
        const Mat2C s1 = evaluate(parse_word("a"), p), s2_inv = evaluate(parse_word("B"), p);
        const Mat2C t = evaluate(parse_word("t"), p);
        const Mat2C tq_inv{1.0, -q1, -q2, 1.0 + q1 * q2};
        for (int k = 0; k < 8; ++k) {
            const cplx z = testing::random_cplx(rng, -2, 2, -2, 2);
            // K^-1 = K.
            const cplx a = K(s1.apply(K(z))), b = s2_inv.apply(z);
            const cplx c = K(t.apply(K(z))), d = tq_inv.apply(z);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(b)));
            CHECK(std::abs(c - d) < 1e-9 * std::max(1.0, std::abs(d)));
        }
    }
}

}  // TEST_SUITE
