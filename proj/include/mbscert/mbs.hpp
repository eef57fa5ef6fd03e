// Measurements realized by a multiport beamsplitter: selecting d input ports
// of a D-port unitary yields a D-outcome measurement on a d-level system,
// projective exactly when d = D.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "mbscert/data.hpp"
#include "mbscert/povm.hpp"

namespace mbscert {

struct MultiportUnitary {
    int ports = 0;
    Mat matrix;
    std::string label;

    void validate(double tolerance) const {
        require(ports > 0, "multiport: nonpositive port count");
        if (matrix.rows() != ports || matrix.cols() != ports)
            throw DimensionMismatchError("multiport: matrix shape mismatch");
        if (unitarity_deviation(matrix) > tolerance)
            throw ValidationError("multiport: too far from unitary: " + label);
    }
};

struct PovmSpec {
    std::vector<int> subset;    // 1-based port indices, d of them, distinct
    std::vector<double> phases; // diagonal phase plate, radians, length d

    void validate(int ports) const {
        require(!subset.empty(), "spec: empty subset");
        require(phases.size() == subset.size(), "spec: phase count mismatch");
        std::vector<bool> seen(ports + 1, false);
        for (int k : subset) {
            if (k < 1 || k > ports)
                throw IndexOutOfRangeError("spec: port index out of range");
            if (seen[k]) throw ValidationError("spec: repeated port index");
            seen[k] = true;
        }
    }
};

inline MultiportUnitary builtin_u4() {
    return {4, data::u4(), "U4"};
}

inline MultiportUnitary builtin_u7() {
    return {7, data::u7(), "U7"};
}

// Element j is built from column j of Phi^dag M, where M collects the
// selected rows of U^dag. Those rows are orthonormal for exactly unitary U,
// which forces completeness.
inline Povm build_povm(const MultiportUnitary& u, const PovmSpec& spec,
                       double completeness_tol = tol::kPrintedData) {
    spec.validate(u.ports);
    const int d = static_cast<int>(spec.subset.size());
    const int big_d = u.ports;
    if (unitarity_deviation(u.matrix) > completeness_tol)
        throw CompletenessViolationError("build_povm: input too far from unitary");
    Mat udag = u.matrix.adjoint();
    Mat m(d, big_d);
    for (int r = 0; r < d; ++r) m.row(r) = udag.row(spec.subset[r] - 1);
    for (int r = 0; r < d; ++r)
        m.row(r) *= std::exp(Cplx(0.0, -spec.phases[r]));
    std::vector<Mat> elements;
    elements.reserve(big_d);
    for (int j = 0; j < big_d; ++j) {
        Vec col = m.col(j);
        elements.push_back(rank1(col));
    }
    Povm p = make_povm(d, std::move(elements));
    p.validate(completeness_tol);
    return p;
}

inline std::vector<std::vector<int>> enumerate_subsets(int big_d, int d) {
    if (d < 1 || d > big_d) throw InvalidDimsError("enumerate_subsets: bad dims");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    for (int i = 0; i < d; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == big_d - (d - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct Rank1Form {
    RVec weights;                 // beta_b = tr(M_b)
    std::vector<Vec> directions;  // unit kets, first nonzero amplitude >= 0
};

// Gauge convention: each direction is scaled so its first nonzero amplitude
// is real nonnegative, making printed-data comparisons deterministic.
inline Vec fix_gauge(Vec v, double zero_tol = 1e-10) {
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > zero_tol) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }
    return v;
}

inline Rank1Form canonical_rank1_form(const Povm& p, double rank_tol = 1e-8) {
    const int n = p.outcomes();
    Rank1Form form;
    form.weights.resize(n);
    form.directions.reserve(n);
    for (int b = 0; b < n; ++b) {
        EigResult e = hermitian_eigendecomposition(p.elements[b]);
        const int d = p.dim;
        if (d > 1 && e.eigenvalues(d - 2) > rank_tol)
            throw NotRankOneError("canonical_rank1_form: element rank exceeds one");
        form.weights(b) = p.elements[b].trace().real();
        Vec dir = e.eigenvectors.col(d - 1);
        if (e.eigenvalues(d - 1) <= rank_tol) dir = Vec::Zero(d);
        form.directions.push_back(fix_gauge(dir.normalized()));
    }
    return form;
}

// The 35 transcribed element matrices, as measurement objects. Column b of
// the 4x7 matrix is the unnormalized direction of element b.
inline Povm builtin_povm(int index) {
    require(index >= 0 && index < data::kNumReferencePovms,
            "builtin_povm: index out of range");
    Mat m = data::element_matrix(index);
    std::vector<Mat> elements;
    elements.reserve(7);
    for (int b = 0; b < 7; ++b) elements.push_back(rank1(Vec(m.col(b))));
    return make_povm(4, std::move(elements));
}

inline Povm builtin_m4567_povm() { return builtin_povm(data::kIndexM4567); }

struct BuiltinMatrices {
    MultiportUnitary u4;
    MultiportUnitary u7;
    Mat m4567;                        // 4x7 element matrix
    std::vector<Mat> povm_matrices;   // all 35, lexicographic subset order
    std::vector<std::array<int, 4>> subsets;
};

inline BuiltinMatrices builtin_matrices() {
    BuiltinMatrices b;
    b.u4 = builtin_u4();
    b.u7 = builtin_u7();
    b.m4567 = data::m4567();
    for (int i = 0; i < data::kNumReferencePovms; ++i) {
        b.povm_matrices.push_back(data::element_matrix(i));
        b.subsets.push_back(data::subset(i));
    }
    return b;
}

// Data-quality summary for one transcribed measurement versus the same
// subset rebuilt from the transcribed 7-port unitary.
struct PovmComparison {
    std::array<int, 4> subset{};
    double completeness_residual = 0.0;    // of the transcribed matrix
    double rebuilt_residual = 0.0;         // after nearest_unitary cleanup
    double max_element_distance = 0.0;     // operator distance, gauge-free
    double max_raw_entry_distance = 0.0;   // entrywise, no phase adjustment
    bool phase_convention_mismatch = false;
};

inline PovmComparison compare_builtin(int index, const MultiportUnitary& u7_clean) {
    PovmComparison c;
    c.subset = data::subset(index);
    Povm printed = builtin_povm(index);
    c.completeness_residual = printed.completeness_residual();
    PovmSpec spec;
    spec.subset.assign(c.subset.begin(), c.subset.end());
    spec.phases.assign(4, 0.0);
    Povm rebuilt = build_povm(u7_clean, spec, tol::kPrintedData);
    c.rebuilt_residual = rebuilt.completeness_residual();
    for (int b = 0; b < 7; ++b) {
        c.max_element_distance = std::max(
            c.max_element_distance,
            (printed.elements[b] - rebuilt.elements[b]).norm());
    }
    Mat raw = data::element_matrix(index);
    Mat udag = u7_clean.matrix.adjoint();
    Mat sub(4, 7);
    for (int r = 0; r < 4; ++r) sub.row(r) = udag.row(c.subset[r] - 1);
    c.max_raw_entry_distance = (raw - sub).cwiseAbs().maxCoeff();
    // element operators agree but the printed matrix entries are not the
    // literal rows of U7^dag: per-element phases were absorbed in print
    c.phase_convention_mismatch =
        c.max_raw_entry_distance > 10.0 * c.max_element_distance + 1e-6;
    return c;
}

}  // namespace mbscert
