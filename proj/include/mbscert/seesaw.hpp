// Alternating lower-bound optimizer. Each block update is an exact best
// response: dichotomic measurements from a positive-eigenspace projector,
// states from a top eigenvector, and the final measurement from the
// discrimination fixed point. W therefore never decreases along a sweep.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbscert/discrimination.hpp"
#include "mbscert/game.hpp"
#include "mbscert/mbs.hpp"

namespace mbscert {

enum class SeesawMode {
    kFixedFinal,         // final measurement frozen (reference element matrix)
    kProjectiveRelaxed,  // final relaxed to 4 outcomes, outcomes 5..7 zero
    kFree,               // final is an arbitrary 7-outcome measurement
};

struct SeesawConfig {
    SeesawMode mode = SeesawMode::kProjectiveRelaxed;
    int restarts = 50;
    int max_iters = 500;
    double delta_w = 1e-9;
    std::uint64_t rng_seed = 0;

    void validate() const {
        require(restarts >= 1, "seesaw: restarts must be >= 1");
        require(max_iters >= 1, "seesaw: max_iters must be >= 1");
        require(delta_w > 0.0, "seesaw: convergence threshold must be positive");
    }
};

struct SeesawTrace {
    std::vector<double> w_history;  // winning restart, one entry per sweep
    Strategy best;
    double best_w = 0.0;
    int best_restart = -1;
    bool converged = false;
    ProjectivityReport final_report;
};

// E_{1|y} collects the positive eigenspace of 2 rho_y - sum_{x!=y} rho_x;
// any other effect scores no better on the y block.
inline std::vector<Povm> update_dichotomic(const std::vector<Vec>& states) {
    require(states.size() == kNumInputs, "update_dichotomic: need 7 states");
    const int d = static_cast<int>(states[0].size());
    std::vector<Povm> out;
    out.reserve(kNumInputs);
    for (int y = 0; y < kNumInputs; ++y) {
        Mat a = 2.0 * rank1(states[y]);
        for (int x = 0; x < kNumInputs; ++x)
            if (x != y) a -= rank1(states[x]);
        Mat e1 = positive_eigenspace_projector(a);
        out.push_back(make_povm(d, {Mat::Identity(d, d) - e1, e1}));
    }
    return out;
}

// psi_x is the top eigenvector of 2 E_{1|x} + sum_{y!=x} E_{0|y} + 3 M_x.
inline std::vector<Vec> update_states(const std::vector<Povm>& dichotomic,
                                      const Povm& final_povm) {
    require(dichotomic.size() == kNumInputs, "update_states: need 7 measurements");
    require(final_povm.outcomes() == kNumInputs, "update_states: final outcomes");
    std::vector<Vec> out;
    out.reserve(kNumInputs);
    for (int x = 0; x < kNumInputs; ++x) {
        Mat b = 2.0 * dichotomic[x].elements[1] + 3.0 * final_povm.elements[x];
        for (int y = 0; y < kNumInputs; ++y)
            if (y != x) b += dichotomic[y].elements[0];
        out.push_back(top_eigenvector(b).vector);
    }
    return out;
}

// Best final measurement for the 3-point identification term, over POVMs
// with n_outcomes outcomes; outcome b pairs with states[b].
inline DiscriminationResult update_final_result(const std::vector<Vec>& states,
                                                int n_outcomes,
                                                const Povm* init = nullptr) {
    require(n_outcomes == 4 || n_outcomes == 7, "update_final: outcomes in {4,7}");
    require(static_cast<int>(states.size()) >= n_outcomes,
            "update_final: not enough states");
    const int d = static_cast<int>(states[0].size());
    std::vector<Mat> weights;
    weights.reserve(n_outcomes);
    for (int b = 0; b < n_outcomes; ++b) weights.push_back(3.0 * rank1(states[b]));
    return optimal_discrimination(weights, d, init);
}

inline Povm update_final_povm(const std::vector<Vec>& states, int n_outcomes,
                              const Povm* init = nullptr) {
    DiscriminationResult r = update_final_result(states, n_outcomes, init);
    if (!r.converged)
        throw SolverNotConvergedError(
            "update_final_povm: optimality gap " + std::to_string(r.dual_gap) +
            ", residual " + std::to_string(r.residual));
    return r.povm;
}

namespace detail {

inline Povm embed_final(const Povm& four, int dim) {
    Povm out = four;
    while (out.outcomes() < kNumInputs)
        out.elements.push_back(Mat::Zero(dim, dim));
    return out;
}

inline Povm truncate_final(const Povm& seven) {
    Povm out = seven;
    out.elements.resize(4);
    return out;
}

struct RestartOutcome {
    Strategy strategy;
    std::vector<double> history;
    double w = 0.0;
    bool converged = false;
};

inline RestartOutcome run_restart(const SeesawConfig& cfg, Rng rng,
                                  const Strategy* initial) {
    const int d = kGameDim;
    RestartOutcome out;
    Strategy& s = out.strategy;
    if (initial) {
        s = *initial;
    } else {
        for (int x = 0; x < kNumInputs; ++x) s.states.push_back(random_ket(d, rng));
        s.dichotomic = update_dichotomic(s.states);
        switch (cfg.mode) {
            case SeesawMode::kFixedFinal:
                s.final_povm = builtin_m4567_povm();
                break;
            case SeesawMode::kProjectiveRelaxed:
                s.final_povm = embed_final(update_final_result(s.states, 4).povm, d);
                break;
            case SeesawMode::kFree:
                s.final_povm = update_final_result(s.states, 7).povm;
                break;
        }
    }
    double w_prev = score(s);
    out.history.push_back(w_prev);
    for (int it = 0; it < cfg.max_iters; ++it) {
        s.states = update_states(s.dichotomic, s.final_povm);
        s.dichotomic = update_dichotomic(s.states);
        if (cfg.mode == SeesawMode::kProjectiveRelaxed) {
            Povm warm = truncate_final(s.final_povm);
            s.final_povm = embed_final(update_final_result(s.states, 4, &warm).povm, d);
        } else if (cfg.mode == SeesawMode::kFree) {
            s.final_povm = update_final_result(s.states, 7, &s.final_povm).povm;
        }
        double w = score(s);
        out.history.push_back(w);
        if (w - w_prev < cfg.delta_w) {
            out.converged = true;
            w_prev = w;
            break;
        }
        w_prev = w;
    }
    out.w = w_prev;
    return out;
}

}  // namespace detail

// Best-of-restarts alternating optimization. With an initial strategy, the
// first restart refines it and the remaining restarts are random. Identical
// seed and config reproduce the trace exactly.
inline SeesawTrace run_seesaw(const SeesawConfig& cfg,
                              const Strategy* initial = nullptr) {
    cfg.validate();
    if (initial) initial->validate(tol::kPrintedData);
    Rng base(cfg.rng_seed);
    SeesawTrace trace;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng = base.substream(static_cast<std::uint64_t>(r));
        const Strategy* start = (r == 0) ? initial : nullptr;
        detail::RestartOutcome res = detail::run_restart(cfg, rng, start);
        if (trace.best_restart < 0 || res.w > trace.best_w) {
            trace.best_w = res.w;
            trace.best = res.strategy;
            trace.w_history = res.history;
            trace.best_restart = r;
            trace.converged = res.converged;
        }
    }
    trace.final_report = projectivity_report(trace.best.final_povm);
    return trace;
}

}  // namespace mbscert
