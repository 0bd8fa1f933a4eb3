#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmg/lmg_model.hpp"

using namespace lmg;

TEST_CASE("parameter domain is enforced") {
    CHECK_THROWS_AS(LmgParams(0.0, 0.5, 0.1, HalfInteger(10)), ConfigError);
    CHECK_THROWS_AS(LmgParams(-1.0, 0.5, 0.1, HalfInteger(10)), ConfigError);
    CHECK_THROWS_AS(LmgParams(1.0, -0.1, 0.1, HalfInteger(10)), ConfigError);
    CHECK_THROWS_AS(LmgParams(1.0, 1.1, 0.1, HalfInteger(10)), ConfigError);
    CHECK_THROWS_AS(LmgParams(1.0, 0.5, 0.1, HalfInteger(0)), ConfigError);
    CHECK_NOTHROW(LmgParams(2.0, 1.0, -0.3, HalfInteger(1)));
}

TEST_CASE("diagonal case gamma=0, h=0 reproduces -(J/j) m^2") {
    const LmgParams p(1.0, 0.0, 0.0, HalfInteger(4));   // j = 2
    const HermitianOperator h = build_hamiltonian(p);
    for (int k = 0; k < 5; ++k) {
        const double m = p.j.m(k);
        CHECK(h.matrix()(k, k).real() == doctest::Approx(-m * m / 2.0).epsilon(1e-14));
    }
    const GroundState gs = ground_state(p, Tiebreak::max_jz);
    CHECK(gs.energy == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("Hamiltonian is real in the Dicke basis and parity symmetric") {
    for (const double gamma : {0.0, 0.3, 1.0}) {
        const LmgParams p(1.0, gamma, 0.45, HalfInteger(21));
        const HermitianOperator h = build_hamiltonian(p);
        CHECK(h.matrix().imag().cwiseAbs().maxCoeff() < 1e-12);

        const ComplexMatrix pi = parity_operator(p.j);
        const double scale = h.matrix().norm();
        CHECK((pi * h.matrix() * pi.adjoint() - h.matrix()).norm() < 1e-10 * scale);
    }
}

TEST_CASE("isotropic limit commutes with Jx") {
    const LmgParams p(1.0, 1.0, 0.7, HalfInteger(30));
    const HermitianOperator h = build_hamiltonian(p);
    const auto ops = collective_operators(p.j);
    const double scale = h.matrix().norm() * ops.jx.matrix().norm();
    CHECK((h.matrix() * ops.jx.matrix() - ops.jx.matrix() * h.matrix()).norm() < 1e-12 * scale);
}

TEST_CASE("parity operator is the pi rotation about x") {
    // j=1/2: exp(-i pi Jx) = -i sigma_x.
    const ComplexMatrix pi_half = parity_operator(HalfInteger(1));
    CHECK(std::abs(pi_half(0, 1) - Complex(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(pi_half(1, 0) - Complex(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(pi_half(0, 0)) < 1e-12);

    for (const int twice_j : {1, 2, 9, 40}) {
        const HalfInteger j(twice_j);
        const ComplexMatrix pi = parity_operator(j);
        const auto d = j.dim();
        CHECK((pi * pi.adjoint() - ComplexMatrix::Identity(d, d)).norm() < 1e-10);

        const auto ops = collective_operators(j);
        CHECK((pi * ops.jz.matrix() * pi.adjoint() + ops.jz.matrix()).norm() <
              1e-10 * std::max(1.0, ops.jz.matrix().norm()));
        CHECK((pi * ops.jy.matrix() * pi.adjoint() + ops.jy.matrix()).norm() <
              1e-10 * std::max(1.0, ops.jy.matrix().norm()));
        CHECK((pi * ops.jx.matrix() * pi.adjoint() - ops.jx.matrix()).norm() <
              1e-10 * std::max(1.0, ops.jx.matrix().norm()));
    }
}

TEST_CASE("max-jz tiebreak picks the fully polarized state at gamma=0") {
    const LmgParams p(1.0, 0.0, 0.0, HalfInteger(200));
    const GroundState gs = ground_state(p, Tiebreak::max_jz);
    CHECK(gs.degenerate);
    const auto ops = collective_operators(p.j);
    const double jz = gs.vector.dot(ops.jz.matrix() * gs.vector).real();
    CHECK(jz == doctest::Approx(100.0).epsilon(1e-12));
    const double jy = gs.vector.dot(ops.jy.matrix() * gs.vector).real();
    CHECK(std::abs(jy) < 1e-10);
}

TEST_CASE("broken pair at gamma in (0,1) resolves to positive magnetization") {
    const LmgParams p(1.0, 0.5, 0.0, HalfInteger(80));
    const GroundState gs = ground_state(p, Tiebreak::max_jz);
    CHECK(gs.degenerate);
    const auto ops = collective_operators(p.j);
    const double jz = gs.vector.dot(ops.jz.matrix() * gs.vector).real();
    CHECK(jz > 0.9 * p.j.value());

    const GroundState raw = ground_state(p, Tiebreak::raw);
    CHECK(raw.degenerate);
    CHECK(raw.selection_note == "degenerate pair, raw solver vector");
}

TEST_CASE("isotropic ground state is a Jx eigenstate, not an x-polar spin") {
    // At gamma=1, h=0 the Hamiltonian is const + (J/j) Jx^2, so the ground
    // state is the m_x = 0 state for integer j; the evolution triviality that
    // matters downstream only needs a Jx eigenstate.
    const LmgParams p(1.0, 1.0, 0.0, HalfInteger(40));
    const GroundState gs = ground_state(p, Tiebreak::max_jx);
    CHECK_FALSE(gs.degenerate);
    const auto ops = collective_operators(p.j);
    const double jx_mean = gs.vector.dot(ops.jx.matrix() * gs.vector).real();
    const double jx_second = (ops.jx.matrix() * gs.vector).squaredNorm();
    CHECK(std::abs(jx_mean) < 1e-9);
    CHECK(jx_second - jx_mean * jx_mean < 1e-9);   // zero variance: eigenstate
    CHECK(gs.energy == doctest::Approx(-(p.j.value() + 1.0)).epsilon(1e-12));
}

TEST_CASE("unique ground state away from degeneracy") {
    const LmgParams p(1.0, 0.2, 0.3, HalfInteger(100));   // j = 50
    const GroundState gs = ground_state(p, Tiebreak::max_jz);
    const HermitianOperator h = build_hamiltonian(p);
    const double resid = (h.matrix() * gs.vector - gs.energy * gs.vector).norm();
    const Spectrum spec = hermitian_eigendecomposition(h);
    CHECK(resid < 1e-9 * spec.spectral_norm());
    CHECK(std::abs(gs.vector.norm() - 1.0) < 1e-12);
}

TEST_CASE("variational bound on the ground energy in h") {
    const HalfInteger j(60);
    for (const double gamma : {0.0, 0.6}) {
        double prev_h = 0.05;
        double prev_e = ground_state(LmgParams(1.0, gamma, prev_h, j), Tiebreak::max_jz).energy;
        for (double h = 0.15; h < 1.0; h += 0.1) {
            const double e = ground_state(LmgParams(1.0, gamma, h, j), Tiebreak::max_jz).energy;
            CHECK(e <= prev_e + 2.0 * (h - prev_h) * j.value() + 1e-10);
            prev_h = h;
            prev_e = e;
        }
    }
}
