#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "maskit/word.hpp"

namespace maskit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in tau1, tau2 with exact rational coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg1, deg2)
    using Terms = std::map<Key, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c);  // NOLINT: constants convert implicitly
    BiPoly(int c) : BiPoly(Rational(c)) {}

    static BiPoly monomial(int d1, int d2, const Rational& c = 1);
    static BiPoly tau1() { return monomial(1, 0); }
    static BiPoly tau2() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int d1, int d2) const;
    int degree1() const;
    int degree2() const;
    int total_degree() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
    friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    std::complex<double> eval(std::complex<double> t1, std::complex<double> t2) const;

    // e.g. "t1*t2 + 2*t1 - 2*t2 - 2"
    std::string str() const;
    // {"[d1,d2]": "num/den"}
    std::string json() const;

private:
    void add_term(const Key& k, const Rational& c);
    Terms terms_;
};

struct Mat2P {
    BiPoly a{1}, b{0}, c{0}, d{1};

    BiPoly trace() const { return a + d; }
    BiPoly det() const { return a * d - b * c; }
    friend Mat2P operator*(const Mat2P& x, const Mat2P& y);
};

inline constexpr std::size_t default_symbolic_cap = 40;

Mat2P symbolic_generator(Letter l);
// Throws PreconditionError if |w| > cap.
Mat2P symbolic_rep(const GroupWord& w, std::size_t cap = default_symbolic_cap);
BiPoly trace_poly(const GroupWord& w, std::size_t cap = default_symbolic_cap);

// tau_axis -> tau_axis + delta
BiPoly substitute_shift(const BiPoly& poly, int axis, const Rational& delta);

std::string rational_str(const Rational& r);

}  // namespace maskit
