#include "lmg/asymmetry.hpp"

#include <cmath>

namespace lmg {

double asymmetry_general(const HermitianOperator& rho, const HermitianOperator& generator) {
    if (rho.dim() != generator.dim()) {
        throw ConfigError("asymmetry_general: dimension mismatch");
    }
    require_density_matrix(rho);
    const ComplexMatrix commutator =
        rho.matrix() * generator.matrix() - generator.matrix() * rho.matrix();
    return trace_norm(commutator);
}

double asymmetry_pure(const StateVector& psi, const HermitianOperator& generator) {
    if (psi.size() != generator.dim()) {
        throw ConfigError("asymmetry_pure: dimension mismatch");
    }
    const double norm_dev = std::abs(psi.norm() - 1.0);
    if (!(norm_dev <= tol::state_norm)) {
        throw ConfigError("asymmetry_pure: state norm deviates by " + std::to_string(norm_dev));
    }
    const ComplexVector lpsi = generator.matrix() * psi;
    return asymmetry_from_moments(psi.dot(lpsi).real(), lpsi.squaredNorm());
}

double asymmetry_from_moments(double mean, double second_moment) {
    double variance = second_moment - mean * mean;
    if (variance < -1e-10) {
        throw NumericalError("asymmetry: variance " + std::to_string(variance) +
                             " below roundoff budget");
    }
    if (variance < 1e-14) variance = 0.0;
    return 2.0 * std::sqrt(variance);
}

TimeAverageResult time_average(const std::vector<double>& series, const TimeGrid& grid) {
    if (static_cast<int>(series.size()) != grid.n_samples) {
        throw ConfigError("time_average: series length does not match the grid");
    }
    const auto trapezoid_mean = [&](int last) {
        double acc = 0.5 * (series[0] + series[last]);
        for (int k = 1; k < last; ++k) acc += series[k];
        return acc / last;   // dt cancels against the window length
    };

    TimeAverageResult result;
    result.value = trapezoid_mean(grid.n_samples - 1);
    result.first_half = trapezoid_mean((grid.n_samples - 1) / 2);
    const double denom = std::max(std::abs(result.value), std::abs(result.first_half));
    if (denom > 1e-12) {
        result.converged = std::abs(result.value - result.first_half) / denom <= 0.02;
    }
    return result;
}

AsymmetryRecord asymmetry_series(const Trajectory& traj, const GeneratorChoice& gen) {
    AsymmetryRecord record;
    record.axis = gen.axis;
    record.series.reserve(traj.states.size());
    for (const auto& psi : traj.states) {
        record.series.push_back(asymmetry_pure(psi, gen.op));
    }
    record.time_average = time_average(record.series, traj.grid);
    return record;
}

bool symmetric_unitary_invariance_check(const HermitianOperator& rho,
                                        const HermitianOperator& generator, double theta) {
    const double before = asymmetry_general(rho, generator);
    const Spectrum spec = hermitian_eigendecomposition(generator);
    const ComplexMatrix u = unitary_exp(spec, theta);
    const HermitianOperator rotated(u * rho.matrix() * u.adjoint());
    const double after = asymmetry_general(rotated, generator);
    const double scale = std::max({before, after, 1.0});
    return std::abs(after - before) <= 1e-10 * scale;
}

}  // namespace lmg
