#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mbscert/seesaw.hpp"
#include "golden_values.hpp"

using namespace mbscert;

namespace {

double dichotomic_payoff(const std::vector<Vec>& states, const std::vector<Povm>& e) {
    double acc = 0.0;
    for (int x = 0; x < kNumInputs; ++x)
        for (int y = 0; y < kNumInputs; ++y) {
            double w = (x == y) ? 2.0 : 1.0;
            acc += w * born(states[x], e[y].elements[x == y ? 1 : 0]);
        }
    return acc;
}

}  // namespace

TEST_CASE("dichotomic update returns dominant projective effects") {
    Strategy s = reference_strategy();
    std::vector<Povm> e = update_dichotomic(s.states);
    REQUIRE(e.size() == 7);
    for (const Povm& p : e) {
        REQUIRE(p.outcomes() == 2);
        REQUIRE(p.completeness_residual() < 1e-12);
        REQUIRE(is_projective(p, 1e-9));
    }
    REQUIRE(dichotomic_payoff(s.states, e) >=
            dichotomic_payoff(s.states, s.dichotomic) - 1e-9);

    // no other effect beats the positive-eigenspace choice
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Povm> rival = e;
        int y = static_cast<int>(rng.uniform() * 7);
        Mat g(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) g(r, c) = rng.complex_normal();
        Mat psd = g * g.adjoint();
        Mat e1 = psd / (psd.eigenvalues().real().maxCoeff() + 1e-9);
        rival[y] = make_povm(4, {Mat::Identity(4, 4) - e1, e1});
        REQUIRE(dichotomic_payoff(s.states, rival) <=
                dichotomic_payoff(s.states, e) + 1e-9);
    }
}

TEST_CASE("state update never lowers the score") {
    Strategy s = reference_strategy();
    std::vector<Vec> better = update_states(s.dichotomic, s.final_povm);
    Strategy t = s;
    t.states = better;
    REQUIRE(score(t) >= score(s) - 1e-10);
}

TEST_CASE("final-measurement update solves orthogonal discrimination exactly") {
    std::vector<Vec> basis;
    for (int b = 0; b < 4; ++b) {
        Vec v = Vec::Zero(4);
        v(b) = 1.0;
        basis.push_back(v);
    }
    for (int x = 4; x < 7; ++x) basis.push_back(basis[0]);
    DiscriminationResult r = update_final_result(basis, 4);
    REQUIRE(r.converged);
    REQUIRE(r.dual_gap <= 1e-6);
    REQUIRE(std::abs(r.value - 12.0) < 1e-6);
    Povm p = r.povm;
    REQUIRE(p.completeness_residual() < 1e-9);
    for (int b = 0; b < 4; ++b)
        REQUIRE(std::abs(born(basis[b], p.elements[b]) - 1.0) < 1e-6);
}

TEST_CASE("final-measurement update certifies optimality on random states") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vec> states;
        for (int x = 0; x < 7; ++x) states.push_back(random_ket(4, rng));
        for (int n : {4, 7}) {
            DiscriminationResult r = update_final_result(states, n);
            REQUIRE(r.converged);
            REQUIRE(r.dual_gap <= 1e-6);
            REQUIRE(r.povm.outcomes() == n);
            r.povm.validate(1e-9);
            double direct = 0.0;
            for (int b = 0; b < n; ++b)
                direct += 3.0 * born(states[b], r.povm.elements[b]);
            REQUIRE(std::abs(direct - r.value) < 1e-9);
        }
    }
}

TEST_CASE("sweeps are monotone and converge from many starts") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeesawConfig cfg;
        cfg.mode = SeesawMode::kProjectiveRelaxed;
        cfg.restarts = 1;
        cfg.rng_seed = seed;
        SeesawTrace t = run_seesaw(cfg);
        REQUIRE(t.converged);
        for (std::size_t i = 1; i < t.w_history.size(); ++i)
            REQUIRE(t.w_history[i] >= t.w_history[i - 1] - 1e-10);
        REQUIRE(t.best_w == t.w_history.back());
    }
}

TEST_CASE("identical configurations give identical results") {
    SeesawConfig cfg;
    cfg.mode = SeesawMode::kFree;
    cfg.restarts = 3;
    cfg.rng_seed = 99;
    SeesawTrace a = run_seesaw(cfg);
    SeesawTrace b = run_seesaw(cfg);
    REQUIRE(a.best_w == b.best_w);
    REQUIRE(a.best_restart == b.best_restart);
    for (int x = 0; x < 7; ++x)
        REQUIRE((a.best.states[x] - b.best.states[x]).norm() == 0.0);
}

TEST_CASE("an optimal starting point is not degraded") {
    Strategy init = reference_strategy();
    SeesawConfig cfg;
    cfg.mode = SeesawMode::kFixedFinal;
    cfg.restarts = 1;
    cfg.rng_seed = 5;
    SeesawTrace t = run_seesaw(cfg, &init);
    REQUIRE(t.best_w >= golden::kStrategyScore - 1e-9);
}

TEST_CASE("fixed-final search reaches the shipped optimum") {
    SeesawConfig cfg;
    cfg.mode = SeesawMode::kFixedFinal;
    cfg.restarts = 8;
    cfg.rng_seed = 1;
    SeesawTrace t = run_seesaw(cfg);
    REQUIRE(std::abs(t.best_w - golden::kHeadlineW) < 1e-3);
    REQUIRE(povm_equivalent(t.best.final_povm, builtin_m4567_povm(), 1e-12));
}

TEST_CASE("projective-relaxed search lands on the projective ceiling") {
    SeesawConfig cfg;
    cfg.mode = SeesawMode::kProjectiveRelaxed;
    cfg.restarts = 8;
    cfg.rng_seed = 1;
    SeesawTrace t = run_seesaw(cfg);
    REQUIRE(std::abs(t.best_w - golden::kProjectiveBound) < 1e-3);
    // the relaxation converges to a genuinely projective measurement
    REQUIRE(t.final_report.max_idempotency_defect < 1e-8);
    REQUIRE(t.final_report.projective(1e-6));
    int nonzero = 0;
    for (const Mat& m : t.best.final_povm.elements)
        if (m.norm() > 1e-9) ++nonzero;
    REQUIRE(nonzero <= 4);
}

TEST_CASE("unconstrained search beats both and hits the algebraic maximum") {
    SeesawConfig cfg;
    cfg.mode = SeesawMode::kFree;
    cfg.restarts = 8;
    cfg.rng_seed = 1;
    SeesawTrace t = run_seesaw(cfg);
    REQUIRE(std::abs(t.best_w - golden::kQuantumBound) < 1e-2);
    REQUIRE(t.best_w <= kMaxScore);
}

TEST_CASE("configuration validation") {
    SeesawConfig cfg;
    cfg.restarts = 0;
    REQUIRE_THROWS_AS(run_seesaw(cfg), ValidationError);
    cfg.restarts = 1;
    cfg.max_iters = 0;
    REQUIRE_THROWS_AS(run_seesaw(cfg), ValidationError);
    cfg.max_iters = 100;
    cfg.delta_w = -1.0;
    REQUIRE_THROWS_AS(run_seesaw(cfg), ValidationError);
}
