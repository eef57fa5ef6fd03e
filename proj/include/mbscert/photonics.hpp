// Interferometer simulation: amplitude/phase modulator settings for state
// preparation, the four-port analysis stage, the seven-outcome measurement
// stage, and Poissonian counting. Count tables are conditioned on detection,
// matching how the measured probability tables are normalized.
#pragma once

#include <array>
#include <cmath>

#include "mbscert/data.hpp"
#include "mbscert/stats.hpp"

namespace mbscert {

struct PreparationSetting {
    std::array<double, 4> alpha{};  // transmissivities in [0,1]
    std::array<double, 4> phi{};    // radians

    void validate() const {
        double total = 0.0;
        for (double a : alpha) {
            require(a >= 0.0 && a <= 1.0, "preparation: transmissivity range");
            total += a;
        }
        if (total == 0.0) throw ZeroStateError("preparation: all channels closed");
    }
};

struct AnalysisSetting {
    std::array<double, 4> beta{};
    std::array<double, 4> phi{};

    void validate() const {
        double total = 0.0;
        for (double b : beta) {
            require(b >= 0.0 && b <= 1.0, "analysis: transmissivity range");
            total += b;
        }
        if (total == 0.0) throw ZeroTransmissionError("analysis: all channels closed");
    }
};

struct NoiseModel {
    double mu = 0.2;         // mean photons per pulse; bookkeeping only, the
                             // count scale is carried by shots
    long long shots = 10000; // detected-count scale per setting
    double visibility = 1.0; // interference contrast
    double phase_jitter_sigma = 0.0;  // radians, per setting

    void validate() const {
        require(mu > 0.0, "noise: mu must be positive");
        require(shots >= 1, "noise: shots must be >= 1");
        require(visibility >= 0.0 && visibility <= 1.0, "noise: visibility range");
        require(phase_jitter_sigma >= 0.0, "noise: jitter must be nonnegative");
    }
};

inline Vec prepared_state(const PreparationSetting& s) {
    s.validate();
    Vec v(4);
    for (int j = 0; j < 4; ++j)
        v(j) = s.alpha[j] * std::exp(Cplx(0.0, s.phi[j]));
    return v.normalized();
}

// Inverse of the preparation map: moduli rescaled so the largest channel is
// fully open. prepared_state(settings_for_state(psi)) = psi up to phase.
inline PreparationSetting settings_for_state(const Vec& target) {
    require(target.size() == 4, "settings_for_state: need a 4-level ket");
    PreparationSetting s;
    double top = target.cwiseAbs().maxCoeff();
    require(top > 0.0, "settings_for_state: zero state");
    for (int j = 0; j < 4; ++j) {
        double a = std::abs(target(j));
        s.alpha[j] = a / top;
        s.phi[j] = (a > 1e-14) ? std::arg(target(j)) : 0.0;
    }
    return s;
}

// Analysis settings that route the projection direction onto detector 1:
// the first output amplitude of the closing unitary is proportional to
// <e|chi> when the modulator applies conj(e).
inline AnalysisSetting settings_for_projection(const Vec& direction) {
    PreparationSetting p = settings_for_state(direction.conjugate());
    AnalysisSetting a;
    a.beta = p.alpha;
    a.phi = p.phi;
    return a;
}

// Loss-conditioned detector distribution of the analysis stage: modulator
// diag(beta e^{i phi}) into the four-port unitary, renormalized by what
// survives the modulator.
inline std::array<double, 4> projective_probs(const Vec& state,
                                              const AnalysisSetting& a) {
    require(state.size() == 4, "projective_probs: need a 4-level ket");
    a.validate();
    Vec v(4);
    for (int j = 0; j < 4; ++j)
        v(j) = a.beta[j] * std::exp(Cplx(0.0, a.phi[j])) * state(j);
    double surviving = v.squaredNorm();
    if (surviving <= 0.0)
        throw ZeroTransmissionError("projective_probs: nothing transmitted");
    Vec out = data::u4() * v;
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = std::norm(out(k)) / surviving;
    return p;
}

inline RVec povm_probs(const Vec& state, const Povm& povm) {
    if (state.size() != povm.dim)
        throw DimensionMismatchError("povm_probs: dimension mismatch");
    RVec p(povm.outcomes());
    for (int b = 0; b < povm.outcomes(); ++b)
        p(b) = (state.adjoint() * povm.elements[b] * state).value().real();
    return p;
}

namespace detail {

// Orthonormal completion of a unit direction; returns the three vectors
// the remaining detectors project onto.
inline std::array<Vec, 3> complement_basis(const Vec& e) {
    Mat a = Mat::Identity(4, 4);
    a.col(0) = e;
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    return {q.col(1), q.col(2), q.col(3)};
}

inline Vec jittered_state(const Vec& psi, double sigma, Rng& rng) {
    if (sigma <= 0.0) return psi;
    PreparationSetting s = settings_for_state(psi);
    for (int j = 0; j < 4; ++j) s.phi[j] += sigma * rng.normal();
    return prepared_state(s);
}

}  // namespace detail

// Born probabilities of the strategy with contrast reduction toward the
// uniform detector distribution, then independent Poisson counts with mean
// shots * p per detector. Detector 1 of a PROJ setting carries outcome b=1;
// detectors 2..4 split b=0 along an orthonormal completion when the effect
// is rank-1, evenly otherwise (only their sum enters the analysis).
inline CountTable simulate_counts(const Strategy& strategy, const NoiseModel& noise,
                                  const Rng& rng) {
    noise.validate();
    strategy.validate(tol::kPrintedData);
    const double v = noise.visibility;
    CountTable table;
    table.shots_per_setting = noise.shots;
    table.source_label = "simulated";
    for (int x = 0; x < kNumInputs; ++x) {
        for (int y = 0; y < kNumInputs; ++y) {
            Rng sub = rng.substream(static_cast<std::uint64_t>(x * kNumInputs + y));
            Vec chi = detail::jittered_state(strategy.states[x],
                                             noise.phase_jitter_sigma, sub);
            const Mat& e1 = strategy.dichotomic[y].elements[1];
            double p1 = (chi.adjoint() * e1 * chi).value().real();
            std::array<double, 4> p{};
            p[0] = p1;
            EigResult eig = hermitian_eigendecomposition(e1);
            bool rank_one = eig.eigenvalues(2) < 1e-8 && eig.eigenvalues(3) > 1e-8;
            if (rank_one) {
                auto rest = detail::complement_basis(eig.eigenvectors.col(3));
                for (int k = 0; k < 3; ++k)
                    p[k + 1] = std::norm((rest[k].adjoint() * chi).value());
            } else {
                for (int k = 1; k < 4; ++k) p[k] = (1.0 - p1) / 3.0;
            }
            for (int k = 0; k < 4; ++k) {
                double noisy = v * p[k] + (1.0 - v) / 4.0;
                CountTable::Record rec;
                rec.proj = true;
                rec.x = x + 1;
                rec.y = y + 1;
                rec.outcome = k + 1;
                rec.counts = sub.poisson(noise.shots * noisy);
                table.records.push_back(rec);
            }
        }
    }
    for (int x = 0; x < kNumInputs; ++x) {
        Rng sub = rng.substream(
            static_cast<std::uint64_t>(kNumInputs * kNumInputs + x));
        Vec chi = detail::jittered_state(strategy.states[x],
                                         noise.phase_jitter_sigma, sub);
        RVec p = povm_probs(chi, strategy.final_povm);
        for (int b = 0; b < kNumInputs; ++b) {
            double noisy = v * p(b) + (1.0 - v) / double(kNumInputs);
            CountTable::Record rec;
            rec.proj = false;
            rec.x = x + 1;
            rec.y = 0;
            rec.outcome = b + 1;
            rec.counts = sub.poisson(noise.shots * noisy);
            table.records.push_back(rec);
        }
    }
    return table;
}

}  // namespace mbscert
