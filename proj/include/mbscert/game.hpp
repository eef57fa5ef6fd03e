// The seven-input communication task and its score functional. A strategy is
// seven pure states, seven dichotomic measurements, and one seven-outcome
// final measurement; correct dichotomic answers weigh 2 (diagonal) or 1, and
// identifying the preparation with the final measurement weighs 3.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mbscert/data.hpp"
#include "mbscert/povm.hpp"

namespace mbscert {

inline constexpr int kNumInputs = 7;
inline constexpr int kGameDim = 4;
inline constexpr double kMaxScore = 77.0;  // 14 + 42 + 21

struct Strategy {
    std::vector<Vec> states;       // 7 unit kets in C^4
    std::vector<Povm> dichotomic;  // 7 two-outcome measurements, order (E0, E1)
    Povm final_povm;               // 7 outcomes

    void validate(double completeness_tol = tol::kCompleteness) const {
        require(states.size() == kNumInputs, "strategy: need 7 states");
        require(dichotomic.size() == kNumInputs, "strategy: need 7 dichotomic povms");
        for (const Vec& s : states) {
            if (s.size() != kGameDim)
                throw DimensionMismatchError("strategy: state dimension");
            require(std::abs(s.norm() - 1.0) <= 1e-9, "strategy: state not normalized");
        }
        for (const Povm& e : dichotomic) {
            require(e.outcomes() == 2, "strategy: dichotomic outcome count");
            e.validate(completeness_tol);
        }
        require(final_povm.outcomes() == kNumInputs, "strategy: final outcome count");
        final_povm.validate(completeness_tol);
    }
};

struct ProbabilityTables {
    RMat proj;        // 7x7, entry (x,y) = p(b = delta_xy | x, y)
    RVec povm;        // p(b' = x | x)
    RMat proj_sigma;  // standard deviations, zero when not available
    RVec povm_sigma;
    bool has_sigma = false;

    void validate() const {
        require(proj.rows() == kNumInputs && proj.cols() == kNumInputs,
                "tables: proj shape");
        require(povm.size() == kNumInputs, "tables: povm length");
        for (int x = 0; x < kNumInputs; ++x) {
            for (int y = 0; y < kNumInputs; ++y)
                if (proj(x, y) < -1e-9 || proj(x, y) > 1.0 + 1e-9)
                    throw ValidationError("tables: proj entry outside [0,1]");
            if (povm(x) < -1e-9 || povm(x) > 1.0 + 1e-9)
                throw ValidationError("tables: povm entry outside [0,1]");
        }
    }
};

inline double born(const Vec& psi, const Mat& op) {
    return (psi.adjoint() * op * psi).value().real();
}

inline ProbabilityTables score_breakdown(const Strategy& s) {
    ProbabilityTables t;
    t.proj.resize(kNumInputs, kNumInputs);
    t.povm.resize(kNumInputs);
    t.proj_sigma = RMat::Zero(kNumInputs, kNumInputs);
    t.povm_sigma = RVec::Zero(kNumInputs);
    for (int x = 0; x < kNumInputs; ++x) {
        for (int y = 0; y < kNumInputs; ++y) {
            double p1 = born(s.states[x], s.dichotomic[y].elements[1]);
            t.proj(x, y) = (x == y) ? p1 : born(s.states[x], s.dichotomic[y].elements[0]);
        }
        t.povm(x) = born(s.states[x], s.final_povm.elements[x]);
    }
    return t;
}

struct ScoreResult {
    double w = 0.0;
    double sigma = 0.0;
    bool has_sigma = false;
};

inline ScoreResult score_from_probabilities(const ProbabilityTables& t) {
    t.validate();
    ScoreResult r;
    double var = 0.0;
    for (int x = 0; x < kNumInputs; ++x) {
        for (int y = 0; y < kNumInputs; ++y) {
            double weight = (x == y) ? 2.0 : 1.0;
            r.w += weight * t.proj(x, y);
            var += weight * weight * t.proj_sigma(x, y) * t.proj_sigma(x, y);
        }
        r.w += 3.0 * t.povm(x);
        var += 9.0 * t.povm_sigma(x) * t.povm_sigma(x);
    }
    if (t.has_sigma) {
        r.sigma = std::sqrt(var);
        r.has_sigma = true;
    }
    return r;
}

inline double score(const Strategy& s) {
    double w = 0.0;
    for (int x = 0; x < kNumInputs; ++x) {
        for (int y = 0; y < kNumInputs; ++y) {
            int correct = (x == y) ? 1 : 0;
            double weight = (x == y) ? 2.0 : 1.0;
            w += weight * born(s.states[x], s.dichotomic[y].elements[correct]);
        }
        w += 3.0 * born(s.states[x], s.final_povm.elements[x]);
    }
    return w;
}

// Density-matrix evaluation, used by tests to confirm purity loses nothing.
inline double score_mixed(const std::vector<Mat>& rhos, const Strategy& s) {
    require(rhos.size() == kNumInputs, "score_mixed: need 7 states");
    double w = 0.0;
    for (int x = 0; x < kNumInputs; ++x) {
        for (int y = 0; y < kNumInputs; ++y) {
            int correct = (x == y) ? 1 : 0;
            double weight = (x == y) ? 2.0 : 1.0;
            w += weight * (rhos[x] * s.dichotomic[y].elements[correct]).trace().real();
        }
        w += 3.0 * (rhos[x] * s.final_povm.elements[x]).trace().real();
    }
    return w;
}

// Simultaneous relabeling of inputs 1..4 on states, dichotomic settings, and
// final outcomes; the score functional is invariant under it.
inline Strategy relabel(const Strategy& s, const std::array<int, 4>& perm) {
    auto mapped = [&perm](int i) { return i < 4 ? perm[i] : i; };
    Strategy out = s;
    for (int x = 0; x < kNumInputs; ++x) {
        out.states[mapped(x)] = s.states[x];
        out.dichotomic[mapped(x)] = s.dichotomic[x];
        out.final_povm.elements[mapped(x)] = s.final_povm.elements[x];
    }
    return out;
}

// The transcribed optimal protocol: states and dichotomic directions from the
// printed tables, final measurement from the printed element matrix for port
// subset (4,5,6,7). Printed rows are bras, so kets take a conjugate.
inline Strategy reference_strategy() {
    Strategy s;
    for (int x = 0; x < kNumInputs; ++x) {
        Vec ket = data::state_bra_row(x).conjugate();
        s.states.push_back(ket.normalized());
    }
    for (int y = 0; y < kNumInputs; ++y) {
        Vec e = data::dichotomic_bra_row(y).conjugate().normalized();
        Mat e1 = rank1(e);
        Mat e0 = Mat::Identity(kGameDim, kGameDim) - e1;
        s.dichotomic.push_back(make_povm(kGameDim, {e0, e1}));
    }
    Mat m = data::m4567();
    std::vector<Mat> els;
    for (int b = 0; b < kNumInputs; ++b) els.push_back(rank1(Vec(m.col(b))));
    s.final_povm = make_povm(kGameDim, std::move(els));
    return s;
}

}  // namespace mbscert
