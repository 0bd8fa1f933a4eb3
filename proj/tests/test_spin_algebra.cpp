#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lmg/lmg_model.hpp"
#include "lmg/spin_algebra.hpp"
#include "lmg/validate.hpp"

using namespace lmg;

namespace {

ComplexMatrix random_anti_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    }
    return 0.5 * (a - a.adjoint());
}

}  // namespace

TEST_CASE("spin one half matrices match the Pauli algebra") {
    const auto ops = collective_operators(HalfInteger(1));
    CHECK(ops.jx.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ops.jx.matrix()(1, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ops.jx.matrix()(0, 0) == Complex(0.0, 0.0));
    CHECK(ops.jz.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(ops.jz.matrix()(1, 1).real() == doctest::Approx(-0.5));
    CHECK(ops.jy.matrix()(0, 1) == Complex(0.0, -0.5));
}

TEST_CASE("su(2) closure and Casimir identity across sizes") {
    for (const int twice_j : {1, 2, 20, 200}) {
        const HalfInteger j(twice_j);
        const auto ops = collective_operators(j);
        const auto& jx = ops.jx.matrix();
        const auto& jy = ops.jy.matrix();
        const auto& jz = ops.jz.matrix();
        const Complex i_unit(0.0, 1.0);

        const double d = j.dim();
        CHECK((jx * jy - jy * jx - i_unit * jz).norm() < 1e-12 * d);
        CHECK((jy * jz - jz * jy - i_unit * jx).norm() < 1e-12 * d);
        CHECK((jz * jx - jx * jz - i_unit * jy).norm() < 1e-12 * d);

        const double casimir = j.value() * (j.value() + 1.0);
        const ComplexMatrix total =
            jx * jx + jy * jy + jz * jz - casimir * ComplexMatrix::Identity(j.dim(), j.dim());
        CHECK(total.cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("tridiagonal form agrees with the dense operators") {
    const HalfInteger j(15);
    const auto ops = collective_operators(j);
    const auto tri = collective_tridiagonals(j);
    RandomHermitianSource source(99);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = source.state(j.dim());
        for (const auto axis : {GeneratorAxis::x, GeneratorAxis::y, GeneratorAxis::z}) {
            const ComplexVector dense = ops.along(axis).matrix() * psi;
            const ComplexVector sparse = tri.along(axis).apply(psi);
            CHECK((dense - sparse).norm() < 1e-12 * std::max(dense.norm(), 1.0));
            const auto [mean, second] = tri.along(axis).moments(psi);
            CHECK(mean == doctest::Approx(psi.dot(dense).real()).epsilon(1e-10));
            CHECK(second == doctest::Approx(dense.squaredNorm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("eigendecomposition sorts, reconstructs and is deterministic") {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    const Spectrum spec = hermitian_eigendecomposition(m);
    CHECK(spec.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(spec.eigenvalues(1) == doctest::Approx(2.0));
    CHECK(spec.eigenvalues(2) == doctest::Approx(3.0));
    CHECK(std::abs(spec.eigenvectors(1, 0)) == doctest::Approx(1.0));

    const auto ops = collective_operators(HalfInteger(2));
    const Spectrum zspec = hermitian_eigendecomposition(ops.jz);
    CHECK(zspec.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(zspec.eigenvalues(1) == doctest::Approx(0.0));
    CHECK(zspec.eigenvalues(2) == doctest::Approx(1.0));

    // Deterministic: same input bits, same output bits.
    const HermitianOperator h = build_hamiltonian(LmgParams(1.0, 0.37, 0.41, HalfInteger(41)));
    const Spectrum a = hermitian_eigendecomposition(h);
    const Spectrum b = hermitian_eigendecomposition(h);
    CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.eigenvectors - b.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("diagonal LMG Hamiltonian has the expected ground energy") {
    // gamma=0, h=0, J=1, j=4: eigenvalues -(1/4) m^2, ground energy -4.
    const Spectrum spec =
        hermitian_eigendecomposition(build_hamiltonian(LmgParams(1.0, 0.0, 0.0, HalfInteger(8))));
    CHECK(spec.eigenvalues(0) == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected with a diagnostic") {
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 1) = Complex(1.0, 0.0);
    bad(1, 0) = Complex(0.5, 0.0);
    CHECK_THROWS_WITH_AS(hermitian_eigendecomposition(bad), doctest::Contains("not Hermitian"),
                         ConfigError);
}

TEST_CASE("trace norm basics") {
    CHECK(trace_norm(ComplexMatrix::Zero(4, 4)) == doctest::Approx(0.0));
    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = -3.0;
    CHECK(trace_norm(diag) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("trace norm eigenvalue and singular value routes agree") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        const ComplexMatrix a = random_anti_hermitian(8, rng);
        const double via_eigen = trace_norm(a);
        const double via_svd = singular_value_sum(a);
        CHECK(std::abs(via_eigen - via_svd) < 1e-10 * std::max(via_eigen, 1.0));
    }
}

TEST_CASE("trace norm is a norm on random matrices") {
    std::mt19937_64 rng(1717);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto random_matrix = [&](int dim) {
        ComplexMatrix m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
        return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_matrix(6);
        const ComplexMatrix b = random_matrix(6);
        const double scale = gauss(rng);
        CHECK(trace_norm(scale * a) ==
              doctest::Approx(std::abs(scale) * trace_norm(a)).epsilon(1e-10));
        CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
    }
}

TEST_CASE("brute-force symmetric sector equals the Dicke construction") {
    // N=2, z: diag(1,0,-1)
    const HermitianOperator two_z = brute_force_symmetric_sector(2, GeneratorAxis::z);
    CHECK(two_z.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(two_z.matrix()(1, 1).real() == doctest::Approx(0.0));
    CHECK(two_z.matrix()(2, 2).real() == doctest::Approx(-1.0));

    for (const int n : {2, 3, 4, 5, 6, 8}) {
        const auto dicke = collective_operators(HalfInteger::from_particle_count(n));
        for (const auto axis : {GeneratorAxis::x, GeneratorAxis::y, GeneratorAxis::z}) {
            const HermitianOperator projected = brute_force_symmetric_sector(n, axis);
            CHECK((projected.matrix() - dicke.along(axis).matrix()).cwiseAbs().maxCoeff() <
                  1e-10);
        }
    }
    CHECK_THROWS_AS(brute_force_symmetric_sector(11, GeneratorAxis::x), ConfigError);
    CHECK_THROWS_AS(brute_force_symmetric_sector(0, GeneratorAxis::x), ConfigError);
}

TEST_CASE("LMG spectra agree between product-space oracle and Dicke basis") {
    const int n = 6;
    const HalfInteger j = HalfInteger::from_particle_count(n);
    const LmgParams params(1.0, 0.4, 0.25, j);
    CollectiveOperators projected{brute_force_symmetric_sector(n, GeneratorAxis::x),
                                  brute_force_symmetric_sector(n, GeneratorAxis::y),
                                  brute_force_symmetric_sector(n, GeneratorAxis::z)};
    const Spectrum oracle = hermitian_eigendecomposition(build_hamiltonian(params, projected));
    const Spectrum dicke = hermitian_eigendecomposition(build_hamiltonian(params));
    CHECK((oracle.eigenvalues - dicke.eigenvalues).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eigendecomposition residual stays small at production size") {
    const HermitianOperator h = build_hamiltonian(LmgParams(1.0, 0.2, 0.8, HalfInteger(200)));
    const Spectrum spec = hermitian_eigendecomposition(h);   // residual checks run inside
    const double resid =
        (spec.eigenvectors * spec.eigenvalues.asDiagonal() * spec.eigenvectors.adjoint() -
         h.matrix())
            .norm();
    CHECK(resid / h.matrix().norm() < 1e-10);
}
