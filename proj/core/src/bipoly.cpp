#include "maskit/bipoly.hpp"

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

#include "maskit/errors.hpp"

namespace maskit {

BiPoly::BiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Key{0, 0}, c);
}

BiPoly BiPoly::monomial(int d1, int d2, const Rational& c) {
    BiPoly p;
    if (c != 0) p.terms_.emplace(Key{d1, d2}, c);
    return p;
}

Rational BiPoly::coeff(int d1, int d2) const {
    auto it = terms_.find({d1, d2});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree1() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree2() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
    return r;
}

std::complex<double> BiPoly::eval(std::complex<double> t1, std::complex<double> t2) const {
    const int n1 = std::max(degree1(), 0), n2 = std::max(degree2(), 0);
    std::vector<std::complex<double>> pw1(n1 + 1, 1.0), pw2(n2 + 1, 1.0);
    for (int i = 1; i <= n1; ++i) pw1[i] = pw1[i - 1] * t1;
    for (int i = 1; i <= n2; ++i) pw2[i] = pw2[i - 1] * t2;
    std::complex<double> s = 0.0;
    for (const auto& [k, c] : terms_) s += c.convert_to<double>() * pw1[k.first] * pw2[k.second];
    return s;
}

std::string rational_str(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

std::string monomial_str(int d1, int d2) {
    std::string s;
    auto add = [&](const char* var, int d) {
        if (d == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (d > 1) s += "^" + std::to_string(d);
    };
    add("t1", d1);
    add("t2", d2);
    return s;
}

std::vector<std::pair<BiPoly::Key, Rational>> sorted_terms(const BiPoly::Terms& t) {
    std::vector<std::pair<BiPoly::Key, Rational>> v(t.begin(), t.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        const int tx = x.first.first + x.first.second, ty = y.first.first + y.first.second;
        if (tx != ty) return tx > ty;
        return x.first.first > y.first.first;
    });
    return v;
}

}  // namespace

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : sorted_terms(terms_)) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        const std::string mono = monomial_str(k.first, k.second);
        std::string body;
        if (mono.empty())
            body = rational_str(mag);
        else if (mag == 1)
            body = mono;
        else
            body = rational_str(mag) + "*" + mono;
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string BiPoly::json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, c] : sorted_terms(terms_))
        j["[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]"] = rational_str(c);
    return j.dump();
}

Mat2P operator*(const Mat2P& x, const Mat2P& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2P symbolic_generator(Letter l) {
    Mat2P m;
    switch (l.gen) {
        case Gen::S1: m = {1, 2, 0, 1}; break;
        case Gen::S2: m = {1, 0, 2, 1}; break;
        case Gen::T: m = {BiPoly(1) + BiPoly::monomial(1, 1), BiPoly::tau1(), BiPoly::tau2(), 1}; break;
    }
    if (l.inverted) m = {m.d, -m.b, -m.c, m.a};
    return m;
}

Mat2P symbolic_rep(const GroupWord& w, std::size_t cap) {
    if (w.size() > cap)
        throw PreconditionError("word length " + std::to_string(w.size()) +
                                " exceeds the symbolic cap " + std::to_string(cap));
    Mat2P m;
    for (Letter l : w.letters()) m = m * symbolic_generator(l);
    return m;
}

BiPoly trace_poly(const GroupWord& w, std::size_t cap) { return symbolic_rep(w, cap).trace(); }

BiPoly substitute_shift(const BiPoly& poly, int axis, const Rational& delta) {
    if (axis != 1 && axis != 2) throw PreconditionError("axis must be 1 or 2");
    if (delta == 0) return poly;
    // (t + delta)^d expanded by the binomial theorem.
    BiPoly out;
    for (const auto& [k, c] : poly.terms()) {
        const int d = axis == 1 ? k.first : k.second;
        BigInt binom = 1;
        Rational dp = 1;
        for (int j = 0; j <= d; ++j) {
            // term: c * C(d,j) delta^j t^(d-j)
            const int rem = d - j;
            const Rational coef = c * Rational(binom) * dp;
            out += axis == 1 ? BiPoly::monomial(rem, k.second, coef)
                             : BiPoly::monomial(k.first, rem, coef);
            binom = binom * (d - j) / (j + 1);
            dp *= delta;
        }
    }
    return out;
}

}  // namespace maskit
