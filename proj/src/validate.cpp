#include "lmg/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "lmg/asymmetry.hpp"
#include "lmg/thermo.hpp"

namespace lmg {

struct RandomHermitianSource::Impl {
    std::mt19937_64 rng;
    std::normal_distribution<double> gauss{0.0, 1.0};

    explicit Impl(std::uint64_t seed) : rng(seed) {}

    Complex draw() { return Complex(gauss(rng), gauss(rng)); }
};

RandomHermitianSource::RandomHermitianSource(std::uint64_t seed) : impl_(new Impl(seed)) {}
RandomHermitianSource::~RandomHermitianSource() { delete impl_; }

StateVector RandomHermitianSource::state(int dim) {
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = impl_->draw();
    return v.normalized();
}

HermitianOperator RandomHermitianSource::hermitian(int dim) {
    ComplexMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) a(r, c) = impl_->draw();
    }
    return HermitianOperator((0.5 * (a + a.adjoint())).eval());
}

HermitianOperator RandomHermitianSource::density_matrix(int dim, int rank) {
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    std::uniform_real_distribution<double> uniform(0.1, 1.0);
    double total = 0.0;
    std::vector<double> weights(rank);
    for (auto& w : weights) {
        w = uniform(impl_->rng);
        total += w;
    }
    for (int k = 0; k < rank; ++k) {
        const StateVector psi = state(dim);
        rho += (weights[k] / total) * (psi * psi.adjoint());
    }
    return HermitianOperator(std::move(rho));
}

namespace {

void check(SuiteResult& suite, bool ok, const std::string& what) {
    if (ok) {
        ++suite.passed;
    } else {
        ++suite.failed;
        suite.failures.push_back(what);
    }
}

SuiteResult brute_force_suite() {
    SuiteResult suite{"brute-force-sector", 0, 0, {}};
    for (const int n : {2, 4, 6, 8}) {
        const HalfInteger j = HalfInteger::from_particle_count(n);
        const auto dicke = collective_operators(j);
        CollectiveOperators projected{brute_force_symmetric_sector(n, GeneratorAxis::x),
                                      brute_force_symmetric_sector(n, GeneratorAxis::y),
                                      brute_force_symmetric_sector(n, GeneratorAxis::z)};
        for (const auto axis : {GeneratorAxis::x, GeneratorAxis::y, GeneratorAxis::z}) {
            const double dev = (projected.along(axis).matrix() - dicke.along(axis).matrix())
                                   .cwiseAbs()
                                   .maxCoeff();
            std::ostringstream what;
            what << "N=" << n << " J" << axis_name(axis) << " entrywise deviation " << dev;
            check(suite, dev <= 1e-10, what.str());
        }

        const LmgParams params(1.0, 0.5, 0.3, j);
        const Spectrum a = hermitian_eigendecomposition(build_hamiltonian(params, projected));
        const Spectrum b = hermitian_eigendecomposition(build_hamiltonian(params, dicke));
        const double spec_dev = (a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff();
        std::ostringstream what;
        what << "N=" << n << " LMG spectrum deviation " << spec_dev;
        check(suite, spec_dev <= 1e-10, what.str());
    }
    return suite;
}

SuiteResult asymmetry_suite(std::uint64_t seed) {
    SuiteResult suite{"asymmetry-pure-vs-general", 0, 0, {}};
    RandomHermitianSource source(seed);
    for (const int dim : {2, 8, 64}) {
        int worst_trial = -1;
        double worst = 0.0;
        const int trials = 200;
        for (int t = 0; t < trials; ++t) {
            const StateVector psi = source.state(dim);
            const HermitianOperator gen = source.hermitian(dim);
            const double fast = asymmetry_pure(psi, gen);
            const HermitianOperator rho((psi * psi.adjoint()).eval());
            const double general = asymmetry_general(rho, gen);
            const double rel = std::abs(fast - general) / std::max({fast, general, 1e-30});
            if (rel > worst) {
                worst = rel;
                worst_trial = t;
            }
        }
        std::ostringstream what;
        what << "d=" << dim << " worst relative deviation " << worst << " (trial " << worst_trial
             << ")";
        check(suite, worst <= 1e-10, what.str());
    }
    return suite;
}

SuiteResult s_function_suite() {
    SuiteResult suite{"s-function-scan", 0, 0, {}};
    check(suite, s_function(0.0) == 0.0, "s(0) must be 0");
    for (const double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const int points = 1000000;
        double scan_min = std::numeric_limits<double>::infinity();
        for (int k = 1; k < points; ++k) {
            const double r = x + (1.0 - x) * k / points;
            scan_min = std::min(scan_min, binary_relative_entropy(r - x, r));
        }
        const double golden = s_function(x);
        std::ostringstream what;
        what << "x=" << x << " golden " << golden << " vs scan " << scan_min;
        check(suite, std::abs(golden - scan_min) <= 1e-8, what.str());
    }
    double prev = 0.0;
    bool monotone = true;
    for (int k = 0; k < 100; ++k) {
        const double x = 0.99 * k / 99.0;
        const double v = s_function(x);
        if (v + 1e-12 < prev) monotone = false;
        prev = v;
    }
    check(suite, monotone, "s(x) must be non-decreasing on [0, 0.99]");
    return suite;
}

}  // namespace

std::vector<SuiteResult> run_validation_suites(std::uint64_t seed) {
    return {brute_force_suite(), asymmetry_suite(seed), s_function_suite()};
}

}  // namespace lmg
