#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace maskit {

// (q1, p1, q2, p2): q_i = i(gamma, sigma_i), p_i the twist.
struct CanonicalCoords {
    std::int64_t q1 = 0, p1 = 0, q2 = 0, p2 = 0;

    std::array<std::int64_t, 4> vec() const { return {q1, p1, q2, p2}; }
    std::string str() const;  // "(q1,p1,q2,p2)"

    friend bool operator==(const CanonicalCoords&, const CanonicalCoords&) = default;
    friend auto operator<=>(const CanonicalCoords&, const CanonicalCoords&) = default;
};

// star(c) = (-p1, q1, -p2, q2); not a coordinate quadruple in general.
// thurston_pairing(c, d) = dot(d, star(c)).
struct DualVector {
    std::int64_t v[4];
    friend bool operator==(const DualVector&, const DualVector&) = default;
};

DualVector star(const CanonicalCoords& c);
std::int64_t dot(const CanonicalCoords& c, const DualVector& d);
std::int64_t thurston_pairing(const CanonicalCoords& c, const CanonicalCoords& d);
bool is_admissible(const CanonicalCoords& c);
bool is_exceptional_pair(const CanonicalCoords& c, const CanonicalCoords& d);

// Rank over Q of the coordinate vectors.
int coords_rank(const std::vector<CanonicalCoords>& cs);

}  // namespace maskit
