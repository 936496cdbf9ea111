#pragma once

#include <algorithm>
#include <random>
#include <string>

#include <maskit/maskit.hpp>

namespace testing {

inline constexpr char alphabet[] = "aAbBtT";

// Freely reduced random word as a string (no adjacent inverse pair).
inline std::string random_word(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::string s;
    while (static_cast<int>(s.size()) < len) {
        const int i = pick(rng);
        if (!s.empty() && s.back() == alphabet[i ^ 1]) continue;
        s.push_back(alphabet[i]);
    }
    return s;
}

inline maskit::cplx random_cplx(std::mt19937_64& rng, double re_lo, double re_hi, double im_lo,
                                double im_hi) {
    return {std::uniform_real_distribution<double>(re_lo, re_hi)(rng),
            std::uniform_real_distribution<double>(im_lo, im_hi)(rng)};
}

inline double entry_scale(const maskit::Mat2C& m) {
    return std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

}  // namespace testing
