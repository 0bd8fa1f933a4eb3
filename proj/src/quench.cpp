#include "lmg/quench.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

namespace lmg {

TimeGrid::TimeGrid(double t_max_, int n_samples_) : t_max(t_max_), n_samples(n_samples_) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ConfigError("TimeGrid: t_max must be positive and finite");
    }
    if (n_samples < 2) {
        throw ConfigError("TimeGrid: need at least 2 samples");
    }
}

StateVector evolve_state(const Spectrum& post_spectrum, const StateVector& psi, double t) {
    const auto d = post_spectrum.eigenvalues.size();
    ComplexVector coeffs = post_spectrum.eigenvectors.adjoint() * psi;
    for (Eigen::Index k = 0; k < d; ++k) {
        coeffs(k) *= std::exp(Complex(0.0, -t * post_spectrum.eigenvalues(k)));
    }
    return post_spectrum.eigenvectors * coeffs;
}

Trajectory evolve_from(const Spectrum& post_spectrum, const HermitianOperator& h_post,
                       const StateVector& psi0, const TimeGrid& grid) {
    if (psi0.size() != h_post.dim()) {
        throw ConfigError("evolve: state dimension does not match the Hamiltonian");
    }
    const double norm_dev = std::abs(psi0.norm() - 1.0);
    if (!(norm_dev <= tol::state_norm)) {
        throw ConfigError("evolve: initial state norm deviates by " + std::to_string(norm_dev));
    }

    const auto d = post_spectrum.eigenvalues.size();
    const int n = grid.n_samples;
    const ComplexVector coeffs = post_spectrum.eigenvectors.adjoint() * psi0;

    // One GEMM for all samples instead of a matvec per sample.
    ComplexMatrix phased(d, n);
    for (int s = 0; s < n; ++s) {
        const double t = grid.time(s);
        for (Eigen::Index k = 0; k < d; ++k) {
            phased(k, s) = coeffs(k) * std::exp(Complex(0.0, -t * post_spectrum.eigenvalues(k)));
        }
    }
    const ComplexMatrix states = post_spectrum.eigenvectors * phased;
    const ComplexMatrix h_states = h_post.matrix() * states;

    const double e0 = (states.col(0).dot(h_states.col(0))).real();
    const double energy_scale =
        std::max({std::abs(e0), 1e-3 * post_spectrum.spectral_norm(), DBL_MIN});

    Trajectory traj{grid, {}, {}};
    traj.states.reserve(n);
    std::vector<double> energy;
    energy.reserve(n);
    for (int s = 0; s < n; ++s) {
        const double nd = std::abs(states.col(s).norm() - 1.0);
        if (!(nd <= tol::state_norm)) {
            throw NumericalError("evolve: norm drift " + std::to_string(nd) + " at t = " +
                                 std::to_string(grid.time(s)));
        }
        const double e_t = (states.col(s).dot(h_states.col(s))).real();
        if (!(std::abs(e_t - e0) <= tol::energy_drift * energy_scale)) {
            throw NumericalError("evolve: energy drift " + std::to_string(e_t - e0) +
                                 " at t = " + std::to_string(grid.time(s)));
        }
        energy.push_back(e_t);
        traj.states.emplace_back(states.col(s));
    }
    traj.observables["energy"] = std::move(energy);
    return traj;
}

Trajectory evolve(const QuenchProtocol& q, const TimeGrid& grid) {
    const GroundState gs = ground_state(q.pre, q.tiebreak);
    const HermitianOperator h_post = build_hamiltonian(q.post);
    const Spectrum post_spectrum = hermitian_eigendecomposition(h_post);
    return evolve_from(post_spectrum, h_post, gs.vector, grid);
}

std::vector<double> return_probability(const Trajectory& traj) {
    if (traj.states.empty()) {
        throw ConfigError("return_probability: empty trajectory");
    }
    const StateVector& psi0 = traj.states.front();
    std::vector<double> probs;
    probs.reserve(traj.states.size());
    for (const auto& psi_t : traj.states) {
        const double p = std::norm(psi0.dot(psi_t));
        probs.push_back(std::min(p, 1.0));
    }
    return probs;
}

std::vector<double> rate_function(const Trajectory& traj, HalfInteger j) {
    const auto probs = return_probability(traj);
    const double n_particles = static_cast<double>(j.twice());
    std::vector<double> rate;
    rate.reserve(probs.size());
    for (const double p : probs) {
        if (p < 1e-300) {
            rate.push_back(std::numeric_limits<double>::infinity());
        } else {
            rate.push_back(-std::log(p) / n_particles);
        }
    }
    return rate;
}

std::vector<double> expectation_series(const Trajectory& traj, const HermitianOperator& a) {
    std::vector<double> values;
    values.reserve(traj.states.size());
    for (const auto& psi : traj.states) {
        if (psi.size() != a.dim()) {
            throw ConfigError("expectation_series: dimension mismatch");
        }
        const Complex v = psi.dot(a.matrix() * psi);
        if (!(std::abs(v.imag()) <= 1e-10)) {
            throw NumericalError("expectation_series: imaginary residue " +
                                 std::to_string(v.imag()));
        }
        values.push_back(v.real());
    }
    return values;
}

}  // namespace lmg
