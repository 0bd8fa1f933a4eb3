#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmg/asymmetry.hpp"
#include "lmg/validate.hpp"

using namespace lmg;

TEST_CASE("states diagonal in the generator basis carry no asymmetry") {
    const auto ops = collective_operators(HalfInteger(7));
    const int d = 8;
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    double w = 0.0;
    for (int k = 0; k < d; ++k) {
        diag(k, k) = 0.5 / (k + 1.0);
        w += diag(k, k).real();
    }
    diag /= w;
    CHECK(asymmetry_general(HermitianOperator(diag), ops.jz) < 1e-12);

    const HermitianOperator mixed(ComplexMatrix::Identity(d, d) / double(d));
    CHECK(asymmetry_general(mixed, ops.jx) < 1e-12);
    CHECK(asymmetry_general(mixed, ops.jy) < 1e-12);
}

TEST_CASE("spin one half x-polarized state against Jz gives exactly 1") {
    const auto ops = collective_operators(HalfInteger(1));
    StateVector plus_x(2);
    plus_x << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(asymmetry_pure(plus_x, ops.jz) == doctest::Approx(1.0).epsilon(1e-12));
    const HermitianOperator rho((plus_x * plus_x.adjoint()).eval());
    CHECK(asymmetry_general(rho, ops.jz) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenstates of the generator have zero asymmetry") {
    const auto ops = collective_operators(HalfInteger(9));
    const Spectrum spec = hermitian_eigendecomposition(ops.jx);
    for (int k = 0; k < 3; ++k) {
        CHECK(asymmetry_pure(spec.eigenvectors.col(k), ops.jx) < 1e-12);
    }
}

TEST_CASE("pure-state closed form matches the eigenvalue route") {
    RandomHermitianSource source(2026);
    for (const int dim : {2, 8, 64}) {
        for (int trial = 0; trial < 60; ++trial) {
            const StateVector psi = source.state(dim);
            const HermitianOperator gen = source.hermitian(dim);
            const double fast = asymmetry_pure(psi, gen);
            const double general =
                asymmetry_general(HermitianOperator((psi * psi.adjoint()).eval()), gen);
            CHECK(std::abs(fast - general) <= 1e-10 * std::max({fast, general, 1e-30}));
        }
    }
}

TEST_CASE("non-density inputs are rejected with diagnostics") {
    const auto ops = collective_operators(HalfInteger(3));
    const int d = 4;
    CHECK_THROWS_WITH_AS(
        asymmetry_general(HermitianOperator(2.0 * ComplexMatrix::Identity(d, d)), ops.jz),
        doctest::Contains("trace"), ConfigError);

    ComplexMatrix indefinite = ComplexMatrix::Zero(d, d);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(asymmetry_general(HermitianOperator(indefinite), ops.jz),
                         doctest::Contains("negative eigenvalue"), ConfigError);
}

TEST_CASE("asymmetry scales homogeneously with the generator") {
    RandomHermitianSource source(31);
    const int d = 12;
    const StateVector psi = source.state(d);
    const HermitianOperator gen = source.hermitian(d);
    const double base = asymmetry_pure(psi, gen);
    for (const double c : {2.0, -0.5, 7.25}) {
        const HermitianOperator scaled((c * gen.matrix()).eval());
        CHECK(asymmetry_pure(psi, scaled) ==
              doctest::Approx(std::abs(c) * base).epsilon(1e-12));
    }
}

TEST_CASE("symmetric unitaries leave the measure invariant") {
    RandomHermitianSource source(777);
    const int d = 16;
    for (int trial = 0; trial < 10; ++trial) {
        const HermitianOperator rho = source.density_matrix(d, 4);
        const HermitianOperator gen = source.hermitian(d);
        CHECK(symmetric_unitary_invariance_check(rho, gen, 0.0));
        CHECK(symmetric_unitary_invariance_check(rho, gen, 0.7));
        CHECK(symmetric_unitary_invariance_check(rho, gen, -2.3));
    }
}

TEST_CASE("time average of simple series") {
    const TimeGrid grid(8.0, 9);
    const std::vector<double> constant(9, 3.25);
    const TimeAverageResult c = time_average(constant, grid);
    CHECK(c.value == doctest::Approx(3.25).epsilon(1e-15));
    CHECK(c.converged);

    // sin over two full periods cancels to quadrature accuracy
    const int n = 2001;
    const TimeGrid sine_grid(4.0 * std::numbers::pi, n);
    std::vector<double> sine(n);
    for (int k = 0; k < n; ++k) sine[k] = std::sin(sine_grid.time(k));
    CHECK(std::abs(time_average(sine, sine_grid).value) < 1e-6);

    // Rising ramp is flagged unconverged (first-half average differs)
    std::vector<double> ramp(9);
    for (int k = 0; k < 9; ++k) ramp[k] = k;
    CHECK_FALSE(time_average(ramp, grid).converged);

    CHECK_THROWS_AS(time_average(std::vector<double>(5, 1.0), grid), ConfigError);
}

TEST_CASE("time average is bounded by the series extrema and grid-stable") {
    const HalfInteger j(40);
    const LmgParams post(1.0, 0.2, 0.8, j);
    const QuenchProtocol q(post, 0.0, Tiebreak::max_jz);
    const auto ops = collective_operators(j);
    const GeneratorChoice gen = GeneratorChoice::make(GeneratorAxis::z, ops);

    const TimeGrid coarse(200.0, 2001);
    const AsymmetryRecord rec = asymmetry_series(evolve(q, coarse), gen);
    const double lo = *std::min_element(rec.series.begin(), rec.series.end());
    const double hi = *std::max_element(rec.series.begin(), rec.series.end());
    CHECK(rec.time_average.value >= lo);
    CHECK(rec.time_average.value <= hi);
    for (const double v : rec.series) CHECK(v >= 0.0);

    const TimeGrid fine(200.0, 4001);
    const AsymmetryRecord rec_fine = asymmetry_series(evolve(q, fine), gen);
    CHECK(std::abs(rec_fine.time_average.value - rec.time_average.value) <
          1e-3 * std::abs(rec.time_average.value));
}

TEST_CASE("trivial isotropic trajectory keeps a constant Jx asymmetry") {
    const HalfInteger j(40);
    const QuenchProtocol q(LmgParams(1.0, 1.0, 0.8, j), 0.0, Tiebreak::max_jx);
    const TimeGrid grid(50.0, 501);
    const AsymmetryRecord rec = asymmetry_series(
        evolve(q, grid), GeneratorChoice::make(GeneratorAxis::x, collective_operators(j)));
    for (const double v : rec.series) CHECK(std::abs(v - rec.series.front()) < 1e-10);
    CHECK(rec.series.front() < 1e-9);
}

TEST_CASE("crossing quenches grow asymmetry much faster than shallow ones") {
    const HalfInteger j(200);
    const TimeGrid grid(50.0, 1001);
    const auto ops = collective_operators(j);
    const GeneratorChoice gen = GeneratorChoice::make(GeneratorAxis::z, ops);

    const AsymmetryRecord deep = asymmetry_series(
        evolve(QuenchProtocol(LmgParams(1.0, 0.2, 0.8, j), 0.0, Tiebreak::max_jz), grid), gen);
    const AsymmetryRecord shallow = asymmetry_series(
        evolve(QuenchProtocol(LmgParams(1.0, 0.2, 0.2, j), 0.0, Tiebreak::max_jz), grid), gen);

    const double deep_max = *std::max_element(deep.series.begin(), deep.series.end());
    const double shallow_max = *std::max_element(shallow.series.begin(), shallow.series.end());
    CHECK(shallow_max < 0.5 * deep_max);

    // growth then plateau: the deep quench reaches half its late-time level fast
    double late = 0.0;
    const int half = grid.n_samples / 2;
    for (int s = half; s < grid.n_samples; ++s) late += deep.series[s];
    late /= (grid.n_samples - half);
    CHECK(deep.series.front() < 0.05 * late);
    double early_max = 0.0;
    for (int s = 0; s < grid.n_samples / 10; ++s) early_max = std::max(early_max, deep.series[s]);
    CHECK(early_max > 0.5 * late);
}
