#pragma once

// Private numerical helpers shared by the tracer and the toy systems.

#include <functional>

#include <Eigen/Dense>

namespace maskit::detail {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct SquareSystem {
    // Residual F(x) and per-row tolerance scale; F has as many rows as x.
    std::function<void(const Vec& x, Vec& f, Vec& scale)> eval;
    // Finite-difference step for coordinate k at x.
    std::function<double(const Vec& x, int k)> fd_step;
    // Exact Jacobian; when empty, central differences are used.
    std::function<void(const Vec& x, Mat& j)> jacobian;
};

enum class NewtonStatus { converged, singular, no_convergence };

struct NewtonOutcome {
    Vec x;
    NewtonStatus status = NewtonStatus::no_convergence;
    int iterations = 0;
    double scaled_residual = 0.0;  // max |F_i| / scale_i
};

Mat fd_jacobian(const SquareSystem& sys, const Vec& x, int rows);
Mat jacobian(const SquareSystem& sys, const Vec& x, int rows);

// Damped Newton; converged when |F_i| <= tol * scale_i for every row.
NewtonOutcome newton(const SquareSystem& sys, Vec x, double tol, int max_iter);

// Unit null vector of a (n-1) x n matrix.
Vec null_vector(const Mat& j);

}  // namespace maskit::detail
