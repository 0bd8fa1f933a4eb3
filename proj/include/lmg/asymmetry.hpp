#pragma once

#include "lmg/quench.hpp"

namespace lmg {

/// One SU(2) generator together with the collective operator realizing it.
struct GeneratorChoice {
    GeneratorAxis axis;
    HermitianOperator op;

    static GeneratorChoice make(GeneratorAxis axis, const CollectiveOperators& ops) {
        return GeneratorChoice{axis, ops.along(axis)};
    }
};

struct TimeAverageResult {
    double value = 0.0;
    double first_half = 0.0;   // average over [0, t_max/2], the convergence witness
    bool converged = true;
};

struct AsymmetryRecord {
    GeneratorAxis axis;
    std::vector<double> series;     // F_L(rho(t)) per sample, >= 0
    TimeAverageResult time_average;
};

// F_L(rho) = ||[rho, L]||_1, the l1-norm asymmetry monotone. Zero iff rho
// commutes with L. rho must be a valid density matrix.
double asymmetry_general(const HermitianOperator& rho, const HermitianOperator& generator);

// Closed form for pure states: ||[|psi><psi|, L]||_1 = 2*sqrt(<L^2> - <L>^2)
// (the commutator has rank two). Production path along trajectories.
double asymmetry_pure(const StateVector& psi, const HermitianOperator& generator);

// The same closed form from precomputed moments, with the shared roundoff
// policy: negative variance is clamped to zero below 1e-14 and rejected below
// -1e-10.
double asymmetry_from_moments(double mean, double second_moment);

// Trapezoidal quadrature divided by t_max. The record is flagged unconverged
// when the average over the first half of the grid differs from the full
// average by more than 2% (relative).
TimeAverageResult time_average(const std::vector<double>& series, const TimeGrid& grid);

// asymmetry_pure per trajectory sample plus its time average.
AsymmetryRecord asymmetry_series(const Trajectory& traj, const GeneratorChoice& gen);

// F_L(U rho U^dag) must equal F_L(rho) for U = exp(-i*theta*L); returns whether
// the two values agree within 1e-10 relative.
bool symmetric_unitary_invariance_check(const HermitianOperator& rho,
                                        const HermitianOperator& generator, double theta);

}  // namespace lmg
