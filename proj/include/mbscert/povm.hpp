// Measurement container and structural checks.
#pragma once

#include <utility>
#include <vector>

#include "mbscert/linalg.hpp"

namespace mbscert {

struct Povm {
    int dim = 0;
    std::vector<Mat> elements;

    int outcomes() const { return static_cast<int>(elements.size()); }

    // completeness_tol distinguishes constructed operators (1e-8) from
    // transcribed ones that are truncated at print precision (2e-2)
    void validate(double completeness_tol = tol::kCompleteness,
                  double psd_tol = tol::kPsd) const {
        require(dim > 0, "povm: nonpositive dimension");
        require(!elements.empty(), "povm: no elements");
        Mat sum = Mat::Zero(dim, dim);
        for (const Mat& m : elements) {
            if (m.rows() != dim || m.cols() != dim)
                throw DimensionMismatchError("povm: element shape mismatch");
            if (!is_hermitian(m, tol::kHermitian))
                throw NonHermitianError("povm: element not Hermitian");
            EigResult e = hermitian_eigendecomposition(m);
            if (e.eigenvalues(0) < -psd_tol)
                throw ValidationError("povm: element not positive semidefinite");
            sum += m;
        }
        if ((sum - Mat::Identity(dim, dim)).norm() > completeness_tol)
            throw CompletenessViolationError("povm: elements do not sum to identity");
    }

    double completeness_residual() const {
        Mat sum = Mat::Zero(dim, dim);
        for (const Mat& m : elements) sum += m;
        return (sum - Mat::Identity(dim, dim)).norm();
    }
};

inline Povm make_povm(int dim, std::vector<Mat> elements) {
    Povm p;
    p.dim = dim;
    p.elements = std::move(elements);
    return p;
}

inline Povm uniform_povm(int dim, int n_outcomes) {
    std::vector<Mat> els(n_outcomes, Mat::Identity(dim, dim) / double(n_outcomes));
    return make_povm(dim, std::move(els));
}

// rank-1 element from an unnormalized direction vector
inline Mat rank1(const Vec& v) { return v * v.adjoint(); }

// Projective iff every element is idempotent and distinct elements are
// mutually orthogonal.
struct ProjectivityReport {
    double max_idempotency_defect = 0.0;  // max ||M^2 - M||
    double max_cross_norm = 0.0;          // max ||M_i M_j||, i != j
    bool projective(double tolerance) const {
        return max_idempotency_defect <= tolerance && max_cross_norm <= tolerance;
    }
};

inline ProjectivityReport projectivity_report(const Povm& p) {
    ProjectivityReport r;
    const int n = p.outcomes();
    for (int i = 0; i < n; ++i) {
        r.max_idempotency_defect = std::max(
            r.max_idempotency_defect,
            (p.elements[i] * p.elements[i] - p.elements[i]).norm());
        for (int j = i + 1; j < n; ++j) {
            r.max_cross_norm =
                std::max(r.max_cross_norm, (p.elements[i] * p.elements[j]).norm());
        }
    }
    return r;
}

inline bool is_projective(const Povm& p, double tolerance = 1e-6) {
    return projectivity_report(p).projective(tolerance);
}

inline bool povm_equivalent(const Povm& p, const Povm& q, double tolerance) {
    if (p.dim != q.dim || p.outcomes() != q.outcomes())
        throw ShapeMismatchError("povm_equivalent: shape mismatch");
    for (int b = 0; b < p.outcomes(); ++b) {
        if ((p.elements[b] - q.elements[b]).norm() > tolerance) return false;
    }
    return true;
}

}  // namespace mbscert
