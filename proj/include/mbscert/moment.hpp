// Sampled moment matrices for the dimension-bounded upper bound. Words are
// products of length <= 2 over the alphabet {identity, states, dichotomic
// effects, final basis projectors}; a realization in d=4 maps each word to a
// 4x4 operator and the Gram matrix of those operators is one sample. Sampled
// matrices span the full feasible affine space; averaging over the label
// symmetries of the score plus complex conjugation collapses that span to a
// small basis that the semidefinite solve can handle.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "mbscert/game.hpp"
#include "mbscert/povm.hpp"

namespace mbscert {

struct MonomialWord {
    enum class Sym { kIdentity, kState, kDichotomic, kBasis };
    struct Factor {
        Sym kind = Sym::kIdentity;
        int label = 0;  // 0-based
    };
    std::vector<Factor> factors;  // empty for identity, length <= 2 otherwise
    int index = 0;
};

namespace words {

inline constexpr int kStates = 7;
inline constexpr int kDichotomic = 7;
inline constexpr int kBasis = 4;
// 1 + 7 + 7 + 4 + 49 + 28
inline constexpr int kCount = 96;

inline int identity_index() { return 0; }
inline int state_index(int x) { return 1 + x; }
inline int dichotomic_index(int y) { return 1 + kStates + y; }
inline int basis_index(int b) { return 1 + kStates + kDichotomic + b; }
inline int state_dichotomic_index(int x, int y) {
    return 1 + kStates + kDichotomic + kBasis + x * kDichotomic + y;
}
inline int state_basis_index(int x, int b) {
    return 1 + kStates + kDichotomic + kBasis + kStates * kDichotomic +
           x * kBasis + b;
}

inline const std::vector<MonomialWord>& list() {
    using Sym = MonomialWord::Sym;
    static const std::vector<MonomialWord> table = [] {
        std::vector<MonomialWord> w;
        w.push_back({{}, 0});
        for (int x = 0; x < kStates; ++x)
            w.push_back({{{Sym::kState, x}}, state_index(x)});
        for (int y = 0; y < kDichotomic; ++y)
            w.push_back({{{Sym::kDichotomic, y}}, dichotomic_index(y)});
        for (int b = 0; b < kBasis; ++b)
            w.push_back({{{Sym::kBasis, b}}, basis_index(b)});
        for (int x = 0; x < kStates; ++x)
            for (int y = 0; y < kDichotomic; ++y)
                w.push_back({{{Sym::kState, x}, {Sym::kDichotomic, y}},
                             state_dichotomic_index(x, y)});
        for (int x = 0; x < kStates; ++x)
            for (int b = 0; b < kBasis; ++b)
                w.push_back(
                    {{{Sym::kState, x}, {Sym::kBasis, b}}, state_basis_index(x, b)});
        return w;
    }();
    return table;
}

}  // namespace words

struct Realization {
    std::vector<Vec> states;        // 7 unit kets
    std::vector<Mat> dichotomic;    // 7 projectors E_{1|y}
    std::vector<Vec> basis;         // orthonormal 4-outcome basis
};

// States Haar-uniform; dichotomic effects rank-1 Haar projectors (the
// converged optimum uses only those, and wider rank sampling drags the
// sampled hull away from it); final basis a Haar orthonormal frame.
inline Realization random_realization(Rng& rng) {
    Realization r;
    for (int x = 0; x < words::kStates; ++x) r.states.push_back(random_ket(4, rng));
    for (int y = 0; y < words::kDichotomic; ++y)
        r.dichotomic.push_back(rank1(random_ket(4, rng)));
    Mat u = haar_unitary(4, rng);
    for (int b = 0; b < words::kBasis; ++b) r.basis.push_back(u.col(b));
    return r;
}

struct MomentMatrix {
    Mat gamma;  // 96x96, entry (u,v) = tr(u^dag v)
};

namespace detail {

inline Mat word_operator(const MonomialWord& w, const Realization& r) {
    using Sym = MonomialWord::Sym;
    Mat op = Mat::Identity(4, 4);
    for (const MonomialWord::Factor& f : w.factors) {
        switch (f.kind) {
            case Sym::kIdentity: break;
            case Sym::kState: op = op * rank1(r.states[f.label]); break;
            case Sym::kDichotomic: op = op * r.dichotomic[f.label]; break;
            case Sym::kBasis: op = op * rank1(r.basis[f.label]); break;
        }
    }
    return op;
}

}  // namespace detail

inline MomentMatrix moment_matrix(const Realization& r) {
    const auto& ws = words::list();
    const int n = words::kCount;
    Mat flat(n, 16);
    for (int i = 0; i < n; ++i) {
        Mat op = detail::word_operator(ws[i], r);
        for (int k = 0; k < 16; ++k) flat(i, k) = op(k % 4, k / 4);
    }
    MomentMatrix m;
    m.gamma = flat.conjugate() * flat.transpose();
    return m;
}

namespace detail {

// Index permutations induced by relabeling: any permutation of labels 1..4
// applied at once to states, dichotomic settings, and basis outcomes, and
// any permutation of labels 5..7 applied to states and dichotomic settings.
inline const std::vector<std::array<int, words::kCount>>& label_permutations() {
    static const std::vector<std::array<int, words::kCount>> table = [] {
        std::vector<std::array<int, 4>> s4;
        std::array<int, 4> p4 = {0, 1, 2, 3};
        do {
            s4.push_back(p4);
        } while (std::next_permutation(p4.begin(), p4.end()));
        std::vector<std::array<int, 3>> s3;
        std::array<int, 3> p3 = {0, 1, 2};
        do {
            s3.push_back(p3);
        } while (std::next_permutation(p3.begin(), p3.end()));

        std::vector<std::array<int, words::kCount>> out;
        for (const auto& a : s4) {
            for (const auto& b : s3) {
                auto map7 = [&](int l) { return l < 4 ? a[l] : 4 + b[l - 4]; };
                std::array<int, words::kCount> pi{};
                pi[words::identity_index()] = words::identity_index();
                for (int x = 0; x < words::kStates; ++x)
                    pi[words::state_index(x)] = words::state_index(map7(x));
                for (int y = 0; y < words::kDichotomic; ++y)
                    pi[words::dichotomic_index(y)] = words::dichotomic_index(map7(y));
                for (int c = 0; c < words::kBasis; ++c)
                    pi[words::basis_index(c)] = words::basis_index(a[c]);
                for (int x = 0; x < words::kStates; ++x) {
                    for (int y = 0; y < words::kDichotomic; ++y)
                        pi[words::state_dichotomic_index(x, y)] =
                            words::state_dichotomic_index(map7(x), map7(y));
                    for (int c = 0; c < words::kBasis; ++c)
                        pi[words::state_basis_index(x, c)] =
                            words::state_basis_index(map7(x), a[c]);
                }
                out.push_back(pi);
            }
        }
        return out;
    }();
    return table;
}

}  // namespace detail

// Group average over the label symmetries followed by the real part. Both
// operations preserve positive semidefiniteness and the objective value.
inline MomentMatrix symmetrize(const MomentMatrix& m) {
    const auto& perms = detail::label_permutations();
    const int n = words::kCount;
    Mat acc = Mat::Zero(n, n);
    for (const auto& pi : perms) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) acc(u, v) += m.gamma(pi[u], pi[v]);
    }
    acc /= static_cast<double>(perms.size());
    MomentMatrix out;
    out.gamma = 0.5 * (acc + acc.conjugate());
    return out;
}

// Score functional on moment-matrix entries. The off-diagonal dichotomic
// terms contribute 1 - Gamma(psi_x, E_y), hence the additive 42.
inline double objective_linear(const Mat& gamma) {
    double v = 0.0;
    for (int x = 0; x < words::kStates; ++x) {
        for (int y = 0; y < words::kDichotomic; ++y) {
            double g = gamma(words::state_index(x), words::dichotomic_index(y)).real();
            v += (x == y) ? 2.0 * g : -g;
        }
    }
    for (int x = 0; x < words::kBasis; ++x)
        v += 3.0 * gamma(words::state_index(x), words::basis_index(x)).real();
    return v;
}

inline double objective_value(const MomentMatrix& m) {
    return 42.0 + objective_linear(m.gamma);
}

// Game score of the strategy a realization encodes (final outcomes 5..7
// empty); used to confirm the objective reads the right entries.
inline double realization_score(const Realization& r) {
    Strategy s;
    s.states = r.states;
    for (int y = 0; y < words::kDichotomic; ++y) {
        Mat e1 = r.dichotomic[y];
        s.dichotomic.push_back(make_povm(4, {Mat::Identity(4, 4) - e1, e1}));
    }
    std::vector<Mat> els;
    for (int b = 0; b < words::kBasis; ++b) els.push_back(rank1(r.basis[b]));
    for (int b = words::kBasis; b < kNumInputs; ++b) els.push_back(Mat::Zero(4, 4));
    s.final_povm = make_povm(4, std::move(els));
    return score(s);
}

struct AffineBasis {
    std::vector<Mat> basis;    // orthonormal span of the kept samples
    std::vector<Mat> samples;  // the kept (independent) sample matrices
    Mat mean;                  // of kept samples; strictly feasible base point
    int rank = 0;
    int samples_used = 0;
    bool saturated = false;
};

// Streaming Gram-Schmidt over sampled (optionally symmetrized) moment
// matrices; stops after `window` consecutive dependent samples.
inline AffineBasis build_affine_basis(int sample_budget, double rank_tol, Rng& rng,
                                      bool symmetrized = true, int window = 50) {
    require(sample_budget >= 1, "build_affine_basis: budget must be >= 1");
    AffineBasis out;
    Mat sum = Mat::Zero(words::kCount, words::kCount);
    int consecutive_dependent = 0;
    for (int i = 0; i < sample_budget; ++i) {
        MomentMatrix m = moment_matrix(random_realization(rng));
        if (symmetrized) m = symmetrize(m);
        out.samples_used = i + 1;
        Mat residual = m.gamma;
        for (const Mat& b : out.basis) {
            Cplx coef = b.conjugate().cwiseProduct(residual).sum();  // tr(b^dag r)
            residual -= coef * b;
        }
        double norm = residual.norm();
        if (norm > rank_tol * m.gamma.norm()) {
            out.basis.push_back(residual / norm);
            out.samples.push_back(m.gamma);
            sum += m.gamma;
            consecutive_dependent = 0;
        } else {
            ++consecutive_dependent;
            if (consecutive_dependent >= window) {
                out.saturated = true;
                break;
            }
        }
    }
    out.rank = static_cast<int>(out.basis.size());
    if (out.rank > 0) out.mean = sum / static_cast<double>(out.rank);
    return out;
}

}  // namespace mbscert
