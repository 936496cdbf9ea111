#include "maskit/coords.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace maskit {

std::string CanonicalCoords::str() const {
    return "(" + std::to_string(q1) + "," + std::to_string(p1) + "," + std::to_string(q2) + "," +
           std::to_string(p2) + ")";
}

DualVector star(const CanonicalCoords& c) { return {{-c.p1, c.q1, -c.p2, c.q2}}; }

std::int64_t dot(const CanonicalCoords& c, const DualVector& d) {
    return c.q1 * d.v[0] + c.p1 * d.v[1] + c.q2 * d.v[2] + c.p2 * d.v[3];
}

std::int64_t thurston_pairing(const CanonicalCoords& c, const CanonicalCoords& d) {
    return (c.q1 * d.p1 - d.q1 * c.p1) + (c.q2 * d.p2 - d.q2 * c.p2);
}

bool is_admissible(const CanonicalCoords& c) { return c.q1 > 0 && c.q2 > 0; }

bool is_exceptional_pair(const CanonicalCoords& c, const CanonicalCoords& d) {
    return c.q1 * d.q2 == d.q1 * c.q2;
}

int coords_rank(const std::vector<CanonicalCoords>& cs) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::array<Q, 4>> m;
    for (const auto& c : cs) m.push_back({Q(c.q1), Q(c.p1), Q(c.q2), Q(c.p2)});
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Q f = m[r][col] / m[rank][col];
            for (int k = col; k < 4; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace maskit
