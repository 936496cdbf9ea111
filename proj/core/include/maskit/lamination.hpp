#pragma once

#include <array>
#include <string>
#include <vector>

#include "maskit/bipoly.hpp"
#include "maskit/coords.hpp"
#include "maskit/word.hpp"

namespace maskit {

struct Curve {
    GroupWord word;
    CanonicalCoords coords;
};

// Coordinates from the trace oracle; word is cyclically reduced first.
Curve make_curve(const GroupWord& w);

using RationalCoords = std::array<Rational, 4>;

struct LaminationComponent {
    Rational weight;
    Curve curve;
};

class RationalLamination {
public:
    RationalLamination() = default;
    explicit RationalLamination(std::vector<LaminationComponent> components);
    static RationalLamination single(const Curve& c, const Rational& weight = 1);

    const std::vector<LaminationComponent>& components() const { return components_; }
    RationalCoords coords() const;
    bool admissible() const;

    std::string str() const;   // "1/2*t + 1*aTAt"
    std::string json() const;  // {"components":[{"weight":..,"word":..,"coords":[..]}]}

private:
    std::vector<LaminationComponent> components_;
};

struct AsymptoticLine {
    Rational x1_star, x2_star;
    double psi = 0.0;  // tan psi = q1/q2
    Rational im_ratio;  // Im tau1 / Im tau2 = q2/q1
};

AsymptoticLine asymptotic_line(const RationalLamination& xi);

// T, [S1,T^-1], [S2,T^-1], S1 S2^-1 T^-1, S1^-1 S2 T^-1
std::vector<GroupWord> seed_words();

struct EnumerationOptions {
    // Also close under the twist about gamma_T. Without it the q-values never
    // leave {(1,1),(0,2),(2,0)}.
    bool twist_t = true;
};

// Closure of the seeds under the twists, deduplicated by coordinates, in BFS
// order; the first word reaching a coordinate class is kept.
std::vector<Curve> enumerate_curves(int depth, const EnumerationOptions& opt = {});

inline constexpr int default_wheel_depth = 3;

std::vector<Curve> wheel_search(const GroupWord& gamma, int count,
                                int depth = default_wheel_depth);
Curve nonexceptional_partner(const GroupWord& gamma, int depth = default_wheel_depth);

}  // namespace maskit
