// Weighted state-discrimination optimizer: maximize sum_b tr(G_b N_b) over
// n-outcome measurements for PSD weights G_b. Uses the fixed-point iteration
//   N_b <- L^+ G_b N_b G_b L^+,  L = (sum_b G_b N_b G_b)^(1/2),
// whose fixed points satisfy the discrimination optimality conditions. The
// kernel of L is handled by spreading the unreached subspace uniformly, and
// a dual certificate bounds the remaining optimality gap.
#pragma once

#include <vector>

#include "mbscert/povm.hpp"

namespace mbscert {

struct DiscriminationResult {
    Povm povm;
    double value = 0.0;
    double residual = 0.0;   // last iterate movement, Frobenius
    double dual_gap = 0.0;   // certified distance to the optimum
    int iterations = 0;
    bool converged = false;
};

inline double discrimination_value(const std::vector<Mat>& weights,
                                   const Povm& p) {
    double v = 0.0;
    for (std::size_t b = 0; b < weights.size(); ++b)
        v += (weights[b] * p.elements[b]).trace().real();
    return v;
}

// Dual bound: min tr(Y) over Y >= G_b for all b. From a primal iterate,
// Y = sym(sum G_b N_b) shifted into feasibility certifies the gap.
inline double discrimination_dual_gap(const std::vector<Mat>& weights,
                                      const Povm& p) {
    const int d = p.dim;
    Mat y = Mat::Zero(d, d);
    for (std::size_t b = 0; b < weights.size(); ++b) y += weights[b] * p.elements[b];
    y = 0.5 * (y + y.adjoint()).eval();
    double shift = 0.0;
    for (const Mat& g : weights) {
        EigResult e = hermitian_eigendecomposition(g - y);
        shift = std::max(shift, e.eigenvalues(e.eigenvalues.size() - 1));
    }
    double dual = y.trace().real() + d * std::max(0.0, shift);
    return dual - discrimination_value(weights, p);
}

inline DiscriminationResult optimal_discrimination(
    const std::vector<Mat>& weights, int dim,
    const Povm* init = nullptr, int max_iters = 2000,
    double residual_tol = 1e-12, double gap_tol = 1e-6) {
    const int n = static_cast<int>(weights.size());
    require(n > 0, "discrimination: no weight operators");
    DiscriminationResult out;
    out.povm = init ? *init : uniform_povm(dim, n);

    for (int it = 0; it < max_iters; ++it) {
        Mat lambda2 = Mat::Zero(dim, dim);
        std::vector<Mat> gng(n);
        for (int b = 0; b < n; ++b) {
            gng[b] = weights[b] * out.povm.elements[b] * weights[b];
            lambda2 += gng[b];
        }
        lambda2 = 0.5 * (lambda2 + lambda2.adjoint()).eval();
        // L^+ = (lambda2)^(-1/2) on the support of lambda2
        PinvSqrt root = psd_pinv_sqrt(lambda2);
        Mat complement = Mat::Identity(dim, dim) - root.support;
        double movement = 0.0;
        std::vector<Mat> next(n);
        for (int b = 0; b < n; ++b) {
            next[b] = root.inv_sqrt * gng[b] * root.inv_sqrt + complement / double(n);
            next[b] = 0.5 * (next[b] + next[b].adjoint()).eval();
            movement = std::max(movement, (next[b] - out.povm.elements[b]).norm());
        }
        out.povm.elements = std::move(next);
        out.residual = movement;
        out.iterations = it + 1;
        if (movement < residual_tol) break;
    }
    out.value = discrimination_value(weights, out.povm);
    out.dual_gap = discrimination_dual_gap(weights, out.povm);
    out.converged = out.dual_gap <= gap_tol;
    return out;
}

}  // namespace mbscert
