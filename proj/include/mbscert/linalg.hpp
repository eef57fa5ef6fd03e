// Dense Hermitian eigentools and matrix factorization helpers.
#pragma once

#include <algorithm>

#include "mbscert/core.hpp"

namespace mbscert {

struct EigResult {
    RVec eigenvalues;  // ascending
    Mat eigenvectors;  // columns, orthonormal
};

inline EigResult hermitian_eigendecomposition(const Mat& a,
                                              double herm_tol = tol::kHermitian) {
    if (!is_square(a)) throw NonSquareError("eigendecomposition: matrix not square");
    if ((a - a.adjoint()).norm() > herm_tol)
        throw NonHermitianError("eigendecomposition: matrix not Hermitian");
    Mat sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    if (es.info() != Eigen::Success)
        throw SolverError("eigendecomposition failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

// Projector onto the strictly positive eigenspace. Maximizes tr(A E) over
// effects 0 <= E <= I; eigenvalues inside (-zero_tol, zero_tol] are left out,
// which cannot change the attained value.
inline Mat positive_eigenspace_projector(const Mat& a,
                                         double zero_tol = tol::kZeroEig) {
    EigResult e = hermitian_eigendecomposition(a);
    const int n = static_cast<int>(a.rows());
    Mat p = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (e.eigenvalues(i) > zero_tol)
            p += e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
    }
    return p;
}

struct TopEig {
    Vec vector;
    double value = 0.0;
    bool degenerate = false;  // top two eigenvalues within 1e-9
};

inline TopEig top_eigenvector(const Mat& a) {
    EigResult e = hermitian_eigendecomposition(a);
    const int n = static_cast<int>(a.rows());
    TopEig out;
    out.vector = e.eigenvectors.col(n - 1);
    out.value = e.eigenvalues(n - 1);
    out.degenerate = n > 1 && (e.eigenvalues(n - 1) - e.eigenvalues(n - 2)) < 1e-9;
    return out;
}

inline double unitarity_deviation(const Mat& a) {
    if (!is_square(a)) throw NonSquareError("unitarity_deviation: matrix not square");
    return (a * a.adjoint() - Mat::Identity(a.rows(), a.rows())).norm();
}

// Polar factor: the unitary closest to A in Frobenius norm.
inline Mat nearest_unitary(const Mat& a) {
    if (!is_square(a)) throw NonSquareError("nearest_unitary: matrix not square");
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(svd.singularValues().size() - 1) < 1e-12)
        throw SingularInputError("nearest_unitary: singular input");
    return svd.matrixU() * svd.matrixV().adjoint();
}

inline Mat psd_sqrt(const Mat& a) {
    EigResult e = hermitian_eigendecomposition(a);
    const int n = static_cast<int>(a.rows());
    Mat s = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double lam = std::max(0.0, e.eigenvalues(i));
        s += std::sqrt(lam) * e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
    }
    return s;
}

// Inverse square root on the support; directions below cutoff are dropped.
// Also reports the support projector so callers can treat the complement.
struct PinvSqrt {
    Mat inv_sqrt;
    Mat support;
    int rank = 0;
};

inline PinvSqrt psd_pinv_sqrt(const Mat& a, double rel_cutoff = 1e-12) {
    EigResult e = hermitian_eigendecomposition(a);
    const int n = static_cast<int>(a.rows());
    double top = std::max(0.0, e.eigenvalues(n - 1));
    double cutoff = rel_cutoff * std::max(top, 1.0);
    PinvSqrt out;
    out.inv_sqrt = Mat::Zero(n, n);
    out.support = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (e.eigenvalues(i) > cutoff) {
            Mat proj = e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
            out.inv_sqrt += proj / std::sqrt(e.eigenvalues(i));
            out.support += proj;
            ++out.rank;
        }
    }
    return out;
}

}  // namespace mbscert
