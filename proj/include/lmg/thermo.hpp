#pragma once

#include <optional>

#include "lmg/asymmetry.hpp"

namespace lmg {

enum class ReferenceKind { ground_of_post, gibbs_of_post, diagonal_of_post };

const char* reference_kind_name(ReferenceKind kind);
ReferenceKind reference_kind_from_name(const std::string& name);

/// Equilibrium reference state for the entropy-production bound.
///
/// ground_of_post is the beta -> infinity Gibbs state and keeps the pure vector
/// around for the fidelity fast path. gibbs_of_post is the canonical state of
/// the post-quench Hamiltonian at a fixed beta. diagonal_of_post is the
/// diagonal ensemble of the quench (post-quench eigenbasis populations of the
/// initial state): the state an isolated quench relaxes to in time average,
/// and the default for figure-class sweeps. With ground or gibbs the bound
/// grows monotonically with quench strength at j ~ 100 because the evolved
/// state becomes orthogonal to any reference pinned near the post ground
/// state; only the diagonal ensemble produces the interior peak of the bound
/// at the dynamical critical point.
struct ReferenceState {
    ReferenceKind kind;
    double beta = std::numeric_limits<double>::infinity();
    HermitianOperator matrix;
    std::optional<StateVector> pure;

    static ReferenceState ground_of_post(const LmgParams& post, Tiebreak tiebreak);
    static ReferenceState gibbs_of_post(const LmgParams& post, double beta);
    static ReferenceState diagonal_of_post(const LmgParams& post, const StateVector& psi0);

    // Spectrum-reusing variants for sweeps that already diagonalized H_post.
    static ReferenceState ground_from_spectrum(const Spectrum& post_spectrum,
                                               const HermitianOperator& h_post, HalfInteger j,
                                               Tiebreak tiebreak);
    static ReferenceState gibbs_from_spectrum(const Spectrum& post_spectrum, double beta);
    static ReferenceState diagonal_from_spectrum(const Spectrum& post_spectrum,
                                                 const StateVector& psi0);
};

struct EntropyBoundRecord {
    std::vector<double> bures_series;   // in [0, pi/2]
    std::vector<double> bound_series;   // s(2 * bures / pi), >= 0
    TimeAverageResult time_average;     // of the bound series
    ReferenceKind reference_kind;
    double beta;
};

// Uhlmann fidelity F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2,
// clamped into [0,1]. General path via Hermitian square roots.
double uhlmann_fidelity(const HermitianOperator& rho, const HermitianOperator& sigma);

// Bures angle arccos(sqrt(F)), a metric on state space with values in [0, pi/2].
double bures_angle(const HermitianOperator& rho, const HermitianOperator& sigma);
double bures_angle_pure_pure(const StateVector& psi, const StateVector& phi);
double bures_angle_pure_mixed(const StateVector& psi, const HermitianOperator& sigma);

// S((p,1-p) || (q,1-q)) = p ln(p/q) + (1-p) ln((1-p)/(1-q)) in nats, with
// 0 ln 0 := 0 and +infinity when q in {0,1} disagrees with p.
double binary_relative_entropy(double p, double q);

// s(x) = min over r in (x,1) of S((r-x, 1-r+x) || (r, 1-r)), by golden-section
// search to 1e-12 in r. Inputs at or above 1 - 1e-9 are clamped (flag reported
// through `clamped` when provided).
double s_function(double x, bool* clamped = nullptr);

// Pointwise Bures angle to the reference followed by s(2*angle/pi), plus the
// time average of the bound.
EntropyBoundRecord entropy_bound_series(const Trajectory& traj, const ReferenceState& ref);

}  // namespace lmg
