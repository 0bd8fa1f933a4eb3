#pragma once

#include <map>
#include <vector>

#include "lmg/lmg_model.hpp"

namespace lmg {

/// Sudden quench h0 -> h; pre and post share J, gamma and j.
struct QuenchProtocol {
    LmgParams pre;
    LmgParams post;
    Tiebreak tiebreak = Tiebreak::max_jz;

    QuenchProtocol(const LmgParams& post_params, double h0, Tiebreak tiebreak_)
        : pre(post_params.with_field(h0)), post(post_params), tiebreak(tiebreak_) {}
};

/// Uniform sample times including t = 0 and t = t_max, in units of 1/J.
struct TimeGrid {
    double t_max;
    int n_samples;

    TimeGrid(double t_max_, int n_samples_);

    double dt() const { return t_max / (n_samples - 1); }
    double time(int k) const { return t_max * k / (n_samples - 1); }
};

struct Trajectory {
    TimeGrid grid;
    std::vector<StateVector> states;                     // one per sample, unit norm
    std::map<std::string, std::vector<double>> observables;
};

// |psi(t)> = V exp(-i Lambda t) V^dag |psi>; exact to eigensolver accuracy.
StateVector evolve_state(const Spectrum& post_spectrum, const StateVector& psi, double t);

// Ground state of the pre-quench Hamiltonian evolved under the post-quench
// spectrum at every grid time. Unit norm (1e-10) and <H_post> conservation
// (1e-9 relative) are checked sample by sample; the energy series is stored
// under observables["energy"].
Trajectory evolve(const QuenchProtocol& q, const TimeGrid& grid);

// Same propagation from an arbitrary normalized initial state.
Trajectory evolve_from(const Spectrum& post_spectrum, const HermitianOperator& h_post,
                       const StateVector& psi0, const TimeGrid& grid);

// L(t) = |<psi0|psi(t)>|^2 with psi0 = states[0].
std::vector<double> return_probability(const Trajectory& traj);

// lambda(t) = -(1/N) ln L(t) with N = 2j. Values of L below 1e-300 are
// reported as +infinity.
std::vector<double> rate_function(const Trajectory& traj, HalfInteger j);

// <psi(t)|A|psi(t)>; the imaginary residue must stay below 1e-10 and is discarded.
std::vector<double> expectation_series(const Trajectory& traj, const HermitianOperator& a);

}  // namespace lmg
