#include "lmg/thermo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lmg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double angle_from_fidelity(double fidelity) {
    return std::acos(std::sqrt(clamp01(fidelity)));
}

ComplexMatrix hermitian_sqrt(const Spectrum& spec) {
    const auto d = spec.eigenvalues.size();
    RealVector roots(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        roots(k) = std::sqrt(std::max(spec.eigenvalues(k), 0.0));
    }
    return spec.eigenvectors * roots.asDiagonal() * spec.eigenvectors.adjoint();
}

}  // namespace

const char* reference_kind_name(ReferenceKind kind) {
    switch (kind) {
        case ReferenceKind::ground_of_post: return "ground";
        case ReferenceKind::gibbs_of_post: return "gibbs";
        case ReferenceKind::diagonal_of_post: return "diagonal";
    }
    return "?";
}

ReferenceKind reference_kind_from_name(const std::string& name) {
    if (name == "ground") return ReferenceKind::ground_of_post;
    if (name == "gibbs") return ReferenceKind::gibbs_of_post;
    if (name == "diagonal") return ReferenceKind::diagonal_of_post;
    throw ConfigError("unknown reference state '" + name +
                      "', expected ground, gibbs or diagonal");
}

ReferenceState ReferenceState::ground_of_post(const LmgParams& post, Tiebreak tiebreak) {
    GroundState gs = lmg::ground_state(post, tiebreak);
    HermitianOperator projector(gs.vector * gs.vector.adjoint());
    return ReferenceState{ReferenceKind::ground_of_post, kInf, std::move(projector),
                          std::move(gs.vector)};
}

ReferenceState ReferenceState::ground_from_spectrum(const Spectrum& post_spectrum,
                                                    const HermitianOperator& h_post,
                                                    HalfInteger j, Tiebreak tiebreak) {
    GroundState gs = select_ground_state(post_spectrum, h_post, j, tiebreak);
    HermitianOperator projector(gs.vector * gs.vector.adjoint());
    return ReferenceState{ReferenceKind::ground_of_post, kInf, std::move(projector),
                          std::move(gs.vector)};
}

ReferenceState ReferenceState::gibbs_of_post(const LmgParams& post, double beta) {
    return gibbs_from_spectrum(hermitian_eigendecomposition(build_hamiltonian(post)), beta);
}

ReferenceState ReferenceState::diagonal_of_post(const LmgParams& post, const StateVector& psi0) {
    return diagonal_from_spectrum(hermitian_eigendecomposition(build_hamiltonian(post)), psi0);
}

ReferenceState ReferenceState::diagonal_from_spectrum(const Spectrum& spec,
                                                      const StateVector& psi0) {
    if (psi0.size() != spec.eigenvalues.size()) {
        throw ConfigError("diagonal_of_post: dimension mismatch");
    }
    const ComplexVector coeffs = spec.eigenvectors.adjoint() * psi0;
    RealVector populations(coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) populations(k) = std::norm(coeffs(k));
    populations /= populations.sum();
    HermitianOperator rho(spec.eigenvectors * populations.asDiagonal() *
                          spec.eigenvectors.adjoint());
    return ReferenceState{ReferenceKind::diagonal_of_post, kInf, std::move(rho), std::nullopt};
}

ReferenceState ReferenceState::gibbs_from_spectrum(const Spectrum& spec, double beta) {
    if (!(beta > 0.0)) {
        throw ConfigError("gibbs_of_post: beta must be positive");
    }
    const auto d = spec.eigenvalues.size();
    // Shift by the ground energy so the largest Boltzmann weight is exactly 1.
    RealVector weights(d);
    double z = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
        weights(k) = std::exp(-beta * (spec.eigenvalues(k) - spec.eigenvalues(0)));
        z += weights(k);
    }
    weights /= z;
    HermitianOperator rho(spec.eigenvectors * weights.asDiagonal() *
                          spec.eigenvectors.adjoint());
    return ReferenceState{ReferenceKind::gibbs_of_post, beta, std::move(rho), std::nullopt};
}

double uhlmann_fidelity(const HermitianOperator& rho, const HermitianOperator& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw ConfigError("uhlmann_fidelity: dimension mismatch");
    }
    require_density_matrix(rho);
    require_density_matrix(sigma);
    const ComplexMatrix root = hermitian_sqrt(hermitian_eigendecomposition(rho));
    const ComplexMatrix inner = root * sigma.matrix() * root;
    const Spectrum spec = hermitian_eigendecomposition(HermitianOperator(
        (0.5 * (inner + inner.adjoint())).eval()));
    double sum = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
        sum += std::sqrt(std::max(spec.eigenvalues(k), 0.0));
    }
    const double fidelity = sum * sum;
    if (!(fidelity <= 1.0 + 1e-12)) {
        throw NumericalError("uhlmann_fidelity: value " + std::to_string(fidelity) +
                             " above 1");
    }
    return clamp01(fidelity);
}

double bures_angle(const HermitianOperator& rho, const HermitianOperator& sigma) {
    return angle_from_fidelity(uhlmann_fidelity(rho, sigma));
}

double bures_angle_pure_pure(const StateVector& psi, const StateVector& phi) {
    return angle_from_fidelity(std::norm(psi.dot(phi)));
}

double bures_angle_pure_mixed(const StateVector& psi, const HermitianOperator& sigma) {
    return angle_from_fidelity(psi.dot(sigma.matrix() * psi).real());
}

double binary_relative_entropy(double p, double q) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("binary_relative_entropy: p must lie in [0,1]");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ConfigError("binary_relative_entropy: q must lie in [0,1]");
    }
    const auto term = [](double a, double b) {
        if (a == 0.0) return 0.0;
        if (b == 0.0) return kInf;
        return a * std::log(a / b);
    };
    return term(p, q) + term(1.0 - p, 1.0 - q);
}

double s_function(double x, bool* clamped) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw ConfigError("s_function: x must lie in [0,1)");
    }
    bool was_clamped = false;
    if (x >= 1.0 - 1e-9) {
        x = 1.0 - 1e-9;
        was_clamped = true;
    }
    if (clamped) *clamped = was_clamped;
    if (x == 0.0) return 0.0;

    const auto objective = [x](double r) { return binary_relative_entropy(r - x, r); };

    // Golden-section search on r in (x, 1); the scan oracle in the tests guards
    // against multimodality.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = x + 1e-12;
    double hi = 1.0 - 1e-12;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = objective(c);
    double fd = objective(d);
    while (hi - lo > 1e-12) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = objective(d);
        }
    }
    return std::min(fc, fd);
}

EntropyBoundRecord entropy_bound_series(const Trajectory& traj, const ReferenceState& ref) {
    EntropyBoundRecord record;
    record.reference_kind = ref.kind;
    record.beta = ref.beta;
    record.bures_series.reserve(traj.states.size());
    record.bound_series.reserve(traj.states.size());

    for (const auto& psi : traj.states) {
        if (psi.size() != ref.matrix.dim()) {
            throw ConfigError("entropy_bound_series: dimension mismatch with reference");
        }
        const double angle = ref.pure ? bures_angle_pure_pure(psi, *ref.pure)
                                      : bures_angle_pure_mixed(psi, ref.matrix);
        record.bures_series.push_back(angle);
        record.bound_series.push_back(s_function(2.0 * angle / std::numbers::pi));
    }
    record.time_average = time_average(record.bound_series, traj.grid);
    return record;
}

}  // namespace lmg
