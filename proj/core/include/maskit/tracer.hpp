#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "maskit/bipoly.hpp"
#include "maskit/coords.hpp"
#include "maskit/lamination.hpp"
#include "maskit/matrix.hpp"
#include "maskit/word.hpp"

namespace maskit {

struct TracerConfig {
    double newton_tol = 1e-12;
    double cusp_tol = 1e-9;
    int max_steps = 4000;
    double fd_step = 1e-6;
    std::size_t symbolic_cap = default_symbolic_cap;
    double initial_step = 0.05;  // relative to max(1, |u|)
    double max_step = 0.2;
    double min_step = 1e-10;
    int max_newton_iter = 50;
    int wheel_depth = default_wheel_depth;
};

// a . (Re t1, Im t1, Re t2, Im t2) = rhs
struct AffineRow {
    std::array<double, 4> a{};
    double rhs = 0.0;
};

struct NewtonResult {
    ParameterPoint point;
    double residual = 0.0;  // max |Im tr| over the constraints
    int iterations = 0;
};

// Damped Newton driving Im tr(w) -> 0 for every constraint while holding the
// affine rows. Rows must total 4. Throws SingularJacobianError or NumericalError.
NewtonResult newton_correct(const ParameterPoint& p, const std::vector<GroupWord>& constraints,
                            const std::vector<AffineRow>& normalizations,
                            const TracerConfig& cfg = {});

// tau_i = -2 p_i/q_i + i 4/(theta q_i)
ParameterPoint seed_point(const RationalLamination& xi, double theta);

enum class TerminusKind { CUSP, MAX_STEPS, DIVERGED, THETA_END };

struct Terminus {
    TerminusKind kind = TerminusKind::MAX_STEPS;
    GroupWord curve;  // the parabolic curve for CUSP
};

std::string to_string(TerminusKind k);

struct RaySample {
    double theta_nominal = 0.0;
    ParameterPoint point;
    double residual = 0.0;
    double arclength = 0.0;
    std::vector<std::pair<std::string, double>> traces;  // word -> Re tr
    std::vector<std::string> flags;
};

struct RayPolyline {
    std::string label;
    std::vector<GroupWord> constraints;
    std::vector<GroupWord> monitored;
    std::vector<RaySample> samples;  // decreasing Im tau1
    Terminus terminus;
};

// Constraints {gamma} + wheel_search(gamma, 2); continued from theta_start
// until a monitored curve becomes parabolic, theta_end is passed or `steps`
// samples were taken.
RayPolyline trace_ray(const GroupWord& gamma, double theta_start, double theta_end, int steps,
                      const TracerConfig& cfg = {});

struct PlaneCorner {
    ParameterPoint point;
    GroupWord first, second;  // the two curves parabolic at the corner
    double s_left = 0.0, s_right = 0.0;
};

struct PlaneTrace {
    bool exceptional = false;
    std::string normalization;  // "im_ratio", "re_x1" or "re_x2"
    std::vector<double> s_values;
    std::vector<RayPolyline> rays;
    std::vector<PlaneCorner> corners;
};

// Pseudo-rays for xi(s) = s gamma1 + (1-s) gamma2, s = k/(s_grid+1).
PlaneTrace trace_plane(const GroupWord& gamma1, const GroupWord& gamma2, int s_grid,
                       double theta_start, double theta_end, const TracerConfig& cfg = {});

// Point where both curves are parabolic, started from `guess`.
ParameterPoint solve_double_cusp(const GroupWord& g1, double sign1, const GroupWord& g2,
                                 double sign2, const ParameterPoint& guess,
                                 const TracerConfig& cfg = {});

struct EDiagnostic {
    double value = 0.0;
};

// (q1 x1 + 2 p1) eta2 + (q2 x2 + 2 p2) eta1
EDiagnostic eval_E(const CanonicalCoords& c, const ParameterPoint& p);

enum class ToySystem { f1, f2, f3 };
enum class ToyOutcome { FAMILY, NONE, UNIQUE, MULTIPLE };

std::string to_string(ToySystem s);
std::string to_string(ToyOutcome o);

struct ToyReport {
    ToySystem which = ToySystem::f1;
    double epsilon = 0.0;
    ToyOutcome outcome = ToyOutcome::NONE;
    std::vector<double> alphas;  // roots for UNIQUE/MULTIPLE
    double max_relative_residual = 0.0;
};

// Im f0 = Im f_w = 0 with z1 = eps i e^{i alpha}, z2 = eps i e^{-i alpha}.
ToyReport toy_branch_check(ToySystem which, double epsilon);

}  // namespace maskit
