#include <algorithm>
#include <cmath>

#include "solver.hpp"

namespace maskit::detail {

namespace {

double scaled_max(const Vec& f, const Vec& scale) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]) / scale[i]);
    return m;
}

}  // namespace

Mat fd_jacobian(const SquareSystem& sys, const Vec& x, int rows) {
    const int n = static_cast<int>(x.size());
    Mat j(rows, n);
    Vec fp(rows), fm(rows), s(rows);
    for (int k = 0; k < n; ++k) {
        const double h = sys.fd_step(x, k);
        Vec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        sys.eval(xp, fp, s);
        sys.eval(xm, fm, s);
        j.col(k) = (fp - fm) / (xp[k] - xm[k]);
    }
    return j;
}

Mat jacobian(const SquareSystem& sys, const Vec& x, int rows) {
    if (!sys.jacobian) return fd_jacobian(sys, x, rows);
    Mat j(rows, x.size());
    sys.jacobian(x, j);
    return j;
}

NewtonOutcome newton(const SquareSystem& sys, Vec x, double tol, int max_iter) {
    const int n = static_cast<int>(x.size());
    Vec f(n), scale(n);
    sys.eval(x, f, scale);
    NewtonOutcome out;
    out.scaled_residual = scaled_max(f, scale);
    bool polishing = false;
    for (int it = 0;; ++it) {
        out.iterations = it;
        if (out.scaled_residual <= tol) {
            if (polishing || it >= max_iter) {
                out.x = x;
                out.status = NewtonStatus::converged;
                return out;
            }
            // One extra full step once inside tol; kept only if it does not hurt.
            polishing = true;
        }
        if (it >= max_iter || !std::isfinite(out.scaled_residual)) break;

        // Row equilibration: trace rows can be many orders larger than affine rows.
        Mat j = jacobian(sys, x, n);
        Vec rhs = -f;
        for (int i = 0; i < n; ++i) {
            const double r = j.row(i).norm();
            if (r > 0.0) {
                j.row(i) /= r;
                rhs[i] /= r;
            }
        }
        Eigen::JacobiSVD<Mat> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        if (!(sv[0] > 0.0) || sv[n - 1] <= 1e-13 * sv[0]) {
            out.x = x;
            out.status = polishing ? NewtonStatus::converged : NewtonStatus::singular;
            return out;
        }
        const Vec dx = svd.solve(rhs);
        if (polishing) {
            Vec xn = x + dx, fn(n), sn(n);
            sys.eval(xn, fn, sn);
            const double rn = scaled_max(fn, sn);
            if (std::isfinite(rn) && rn <= out.scaled_residual) {
                x = xn;
                out.scaled_residual = rn;
            }
            out.x = x;
            out.status = NewtonStatus::converged;
            out.iterations = it + 1;
            return out;
        }

        // Backtracking on the scaled residual.
        double lambda = 1.0;
        Vec xn(n), fn(n), sn(n);
        double rn = 0.0;
        for (;;) {
            xn = x + lambda * dx;
            sys.eval(xn, fn, sn);
            rn = scaled_max(fn, sn);
            if (std::isfinite(rn) && (rn < out.scaled_residual || rn <= tol)) break;
            lambda *= 0.5;
            if (lambda < 1.0 / 64) break;
        }
        if (!(std::isfinite(rn) && (rn < out.scaled_residual || rn <= tol))) {
            // Near the rounding floor a full step may not decrease the residual;
            // accept it once if it stays within a small factor.
            xn = x + dx;
            sys.eval(xn, fn, sn);
            rn = scaled_max(fn, sn);
            if (!(std::isfinite(rn) && rn < 4.0 * out.scaled_residual)) break;
        }
        x = xn;
        f = fn;
        scale = sn;
        out.scaled_residual = rn;
    }
    out.x = x;
    out.status = NewtonStatus::no_convergence;
    return out;
}

Vec null_vector(const Mat& jac) {
    Mat j = jac;
    for (Eigen::Index i = 0; i < j.rows(); ++i)
        if (const double r = j.row(i).norm(); r > 0.0) j.row(i) /= r;
    Eigen::JacobiSVD<Mat> svd(j, Eigen::ComputeFullV);
    Vec v = svd.matrixV().col(j.cols() - 1);
    return v / v.norm();
}

}  // namespace maskit::detail
