// Dense semidefinite solve for the sampled-moment upper bound: maximize the
// score functional over the affine span of the symmetrized samples subject
// to positive semidefiniteness. Every valid symmetrized sample shares the
// same kernel (completeness relations of the final basis), so the feasible
// matrices never touch the interior of the full cone; the solver first
// projects onto that common face (facial reduction) and then runs a log-det
// barrier path-following iteration in the reduced space, where the base
// point is strictly positive definite.
#pragma once

#include <cstdint>
#include <vector>

#include "mbscert/moment.hpp"

namespace mbscert {

struct SolverResiduals {
    double dual_gap = 0.0;       // certified optimality gap estimate
    double min_eigenvalue = 0.0; // of the reduced solution (full-space violation is 0)
    double grad_norm = 0.0;      // final centering residual
    int newton_steps = 0;
    int reduced_size = 0;
};

struct BoundReport {
    double bound = 0.0;
    int basis_rank = 0;
    int samples_used = 0;
    SolverResiduals residuals;
    std::uint64_t seed = 0;
};

namespace detail {

inline RMat to_real(const Mat& a, const char* what) {
    if (a.imag().cwiseAbs().maxCoeff() > 1e-9)
        throw SolverError(std::string("sdp: expected real matrix in ") + what);
    return a.real();
}

// Orthonormal directions spanning {sample - mean} under the trace inner
// product; these are the free parameters of the affine span.
inline std::vector<RMat> affine_directions(const AffineBasis& basis,
                                           const RMat& mean) {
    std::vector<RMat> dirs;
    for (const Mat& s : basis.samples) {
        RMat d = to_real(s, "sample") - mean;
        for (const RMat& b : dirs) d -= b.cwiseProduct(d).sum() * b;
        double n = d.norm();
        if (n > 1e-10) dirs.push_back(d / n);
    }
    return dirs;
}

struct Face {
    RMat v;  // n x m, orthonormal columns spanning the face
    int size = 0;
};

inline Face common_face(const RMat& mean, const std::vector<RMat>& dirs) {
    Eigen::SelfAdjointEigenSolver<RMat> es(mean);
    const RVec& ev = es.eigenvalues();
    double top = ev(ev.size() - 1);
    for (double rel : {1e-8, 1e-10, 1e-12}) {
        double cut = rel * top;
        int first = 0;
        while (first < ev.size() && ev(first) <= cut) ++first;
        Face f;
        f.size = static_cast<int>(ev.size()) - first;
        f.v = es.eigenvectors().rightCols(f.size);
        bool ok = true;
        for (const RMat& d : dirs) {
            RMat proj = f.v * (f.v.transpose() * d * f.v) * f.v.transpose();
            if ((d - proj).norm() > 1e-7 * std::max(1.0, d.norm())) {
                ok = false;
                break;
            }
        }
        if (ok) return f;
    }
    throw SolverNotConvergedError("sdp: no common face contains all directions");
}

}  // namespace detail

inline BoundReport solve_upper_bound(const AffineBasis& basis,
                                     std::uint64_t seed = 0,
                                     double mu_end = 1e-8) {
    require(basis.rank >= 1, "solve_upper_bound: empty basis");
    BoundReport report;
    report.basis_rank = basis.rank;
    report.samples_used = basis.samples_used;
    report.seed = seed;

    RMat mean = detail::to_real(basis.mean, "mean");
    std::vector<RMat> dirs = detail::affine_directions(basis, mean);
    const int p = static_cast<int>(dirs.size());
    double c0 = 42.0 + objective_linear(mean.cast<Cplx>());
    if (p == 0) {  // singleton feasible set
        report.bound = c0;
        report.residuals.min_eigenvalue =
            Eigen::SelfAdjointEigenSolver<RMat>(mean).eigenvalues()(0);
        return report;
    }

    detail::Face face = detail::common_face(mean, dirs);
    const int m = face.size;
    report.residuals.reduced_size = m;
    RMat g0 = face.v.transpose() * mean * face.v;
    std::vector<RMat> dd(p);
    RVec c(p);
    for (int j = 0; j < p; ++j) {
        dd[j] = face.v.transpose() * dirs[j] * face.v;
        dd[j] = 0.5 * (dd[j] + dd[j].transpose()).eval();
        c(j) = objective_linear(dirs[j].cast<Cplx>());
    }

    auto assemble = [&](const RVec& t) {
        RMat x = g0;
        for (int j = 0; j < p; ++j) x += t(j) * dd[j];
        return x;
    };

    RVec t = RVec::Zero(p);
    RMat x = g0;
    Eigen::LLT<RMat> llt(x);
    if (llt.info() != Eigen::Success)
        throw SolverNotConvergedError("sdp: base point not positive definite on face");

    double mu = 10.0 * std::max(1.0, c.cwiseAbs().maxCoeff());
    RVec grad = RVec::Zero(p);
    double decrement = 0.0;
    int total_newton = 0;
    while (true) {
        for (int inner = 0; inner < 60; ++inner) {
            Eigen::LLT<RMat> xllt(x);
            RMat l = xllt.matrixL();
            std::vector<RMat> s(p);
            for (int j = 0; j < p; ++j) {
                RMat half = l.triangularView<Eigen::Lower>().solve(dd[j]);
                s[j] = l.triangularView<Eigen::Lower>()
                           .solve(half.transpose())
                           .transpose();
            }
            RMat hess(p, p);
            for (int j = 0; j < p; ++j) {
                grad(j) = c(j) + mu * s[j].trace();
                for (int k = j; k < p; ++k) {
                    hess(j, k) = mu * s[j].cwiseProduct(s[k]).sum();
                    hess(k, j) = hess(j, k);
                }
            }
            Eigen::LDLT<RMat> hltd(hess + 1e-13 * RMat::Identity(p, p));
            RVec step = hltd.solve(grad);
            decrement = grad.dot(step);
            ++total_newton;
            if (decrement < 1e-12) break;
            auto logdet = [](const Eigen::LLT<RMat>& f) {
                RMat l = f.matrixL();
                double ld = 0.0;
                for (int i = 0; i < l.rows(); ++i) ld += std::log(l(i, i));
                return 2.0 * ld;
            };
            double f_old = c.dot(t) + mu * logdet(xllt);
            double alpha = 1.0;
            while (alpha > 1e-12) {
                RMat xn = assemble(t + alpha * step);
                Eigen::LLT<RMat> test(xn);
                if (test.info() == Eigen::Success &&
                    c.dot(t + alpha * step) + mu * logdet(test) > f_old - 1e-12) {
                    t += alpha * step;
                    x = xn;
                    break;
                }
                alpha *= 0.5;
            }
            if (alpha <= 1e-12)
                throw SolverNotConvergedError("sdp: line search stalled");
        }
        if (mu <= mu_end) break;
        mu = std::max(mu * 0.15, mu_end);
    }

    report.residuals.newton_steps = total_newton;
    report.residuals.grad_norm = grad.cwiseAbs().maxCoeff();
    report.residuals.min_eigenvalue =
        Eigen::SelfAdjointEigenSolver<RMat>(x).eigenvalues()(0);
    // At the exact mu-center the dual slack mu X^{-1} certifies a gap of
    // mu m. Inexact centering with Newton decrement lambda < 1 inflates it
    // to mu (m + lambda (lambda + sqrt(m)) / (1 - lambda)); the raw gradient
    // is not usable here because tr(X^{-1} D) loses all significant digits
    // once X nears the boundary.
    double lambda = std::sqrt(std::max(decrement, 0.0));
    if (lambda >= 0.5)
        throw SolverNotConvergedError("sdp: centering did not converge");
    report.residuals.dual_gap =
        mu * (m + lambda * (lambda + std::sqrt(double(m))) / (1.0 - lambda));
    report.bound = c0 + c.dot(t) + report.residuals.dual_gap;
    if (report.residuals.dual_gap > 1e-5)
        throw SolverNotConvergedError("sdp: duality gap above tolerance");
    return report;
}

}  // namespace mbscert
