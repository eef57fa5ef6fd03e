#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mbscert/moment.hpp"
#include "golden_values.hpp"

using namespace mbscert;

TEST_CASE("word list indexing is stable") {
    const auto& w = words::list();
    REQUIRE(w.size() == words::kCount);
    REQUIRE(words::identity_index() == 0);
    REQUIRE(words::state_index(0) == 1);
    REQUIRE(words::dichotomic_index(0) == 8);
    REQUIRE(words::basis_index(0) == 15);
    REQUIRE(words::state_dichotomic_index(0, 0) == 19);
    REQUIRE(words::state_basis_index(6, 3) == 95);
}

TEST_CASE("random realizations satisfy the operator constraints") {
    Rng rng(21);
    Realization r = random_realization(rng);
    REQUIRE(r.states.size() == 7);
    REQUIRE(r.dichotomic.size() == 7);
    REQUIRE(r.basis.size() == 4);
    for (const Vec& s : r.states) REQUIRE(std::abs(s.norm() - 1.0) < 1e-12);
    for (const Mat& e : r.dichotomic) {
        REQUIRE((e * e - e).norm() < 1e-12);
        REQUIRE(std::abs(e.trace().real() - 1.0) < 1e-12);
    }
    Mat sum = Mat::Zero(4, 4);
    for (const Vec& k : r.basis) {
        REQUIRE(std::abs(k.norm() - 1.0) < 1e-12);
        sum += rank1(k);
    }
    REQUIRE((sum - Mat::Identity(4, 4)).norm() < 1e-12);

    Rng rng_a(1), rng_b(1), rng_c(2);
    Realization a = random_realization(rng_a);
    Realization b = random_realization(rng_b);
    Realization c = random_realization(rng_c);
    REQUIRE((a.states[0] - b.states[0]).norm() == 0.0);
    REQUIRE((a.states[0] - c.states[0]).norm() > 1e-3);
}

TEST_CASE("moment matrices are hermitian and positive semidefinite") {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        Realization r = random_realization(rng);
        MomentMatrix m = moment_matrix(r);
        REQUIRE(m.gamma.rows() == words::kCount);
        REQUIRE((m.gamma - m.gamma.adjoint()).norm() < 1e-9);
        Eigen::SelfAdjointEigenSolver<Mat> es(m.gamma);
        REQUIRE(es.eigenvalues()(0) > -1e-9);
        for (int x = 0; x < 7; ++x) {
            REQUIRE(std::abs(m.gamma(words::identity_index(),
                                     words::state_index(x)) - 1.0) < 1e-12);
            double overlap =
                m.gamma(words::state_index(x), words::basis_index(x % 4)).real();
            REQUIRE(overlap >= -1e-12);
            REQUIRE(overlap <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("symmetrization is idempotent and keeps the objective") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        MomentMatrix m = moment_matrix(random_realization(rng));
        MomentMatrix s = symmetrize(m);
        MomentMatrix ss = symmetrize(s);
        REQUIRE((ss.gamma - s.gamma).norm() < 1e-12);
        REQUIRE(std::abs(objective_value(s) - objective_value(m)) < 1e-9);
        Eigen::SelfAdjointEigenSolver<Mat> es(s.gamma);
        REQUIRE(es.eigenvalues()(0) > -1e-9);
    }
}

TEST_CASE("moment objective equals the game score of the realization") {
    Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        Realization r = random_realization(rng);
        REQUIRE(std::abs(objective_value(moment_matrix(r)) - realization_score(r)) <
                1e-9);
    }
}

TEST_CASE("symmetrized sampling saturates at the reduced rank") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        Rng rng(seed);
        AffineBasis b = build_affine_basis(4000, 1e-7, rng, true);
        REQUIRE(b.rank == golden::kSymmetrizedRank);
        REQUIRE(b.saturated);
        REQUIRE(b.samples_used < 400);
    }
}

TEST_CASE("affine basis is orthonormal") {
    Rng rng(25);
    AffineBasis b = build_affine_basis(4000, 1e-7, rng, true);
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
        REQUIRE(std::abs(b.basis[i].norm() - 1.0) < 1e-8);
        for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
            Cplx ip = b.basis[i].conjugate().cwiseProduct(b.basis[j]).sum();
            REQUIRE(std::abs(ip) < 1e-7);
        }
    }
}

TEST_CASE("raw sampling keeps producing independent directions") {
    Rng rng(26);
    AffineBasis b = build_affine_basis(300, 1e-7, rng, false);
    REQUIRE(!b.saturated);
    REQUIRE(b.rank > golden::kSymmetrizedRank);
    REQUIRE(b.rank == 300);
}
