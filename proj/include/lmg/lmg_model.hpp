#pragma once

#include <string>

#include "lmg/spin_algebra.hpp"

namespace lmg {

/// Model parameters for H = -(J/j)(Jz^2 + gamma*Jy^2) - 2h*Jx.
/// hbar = 1 throughout; time is measured in units of 1/J.
struct LmgParams {
    double coupling = 1.0;   // J, ferromagnetic (> 0)
    double gamma = 0.0;      // anisotropy in [0,1]
    double h = 0.0;          // transverse field
    HalfInteger j;

    LmgParams(double coupling_, double gamma_, double h_, HalfInteger j_);

    LmgParams with_field(double new_h) const { return LmgParams(coupling, gamma, new_h, j); }
};

enum class Tiebreak { max_jz, max_jx, raw };

const char* tiebreak_name(Tiebreak t);
Tiebreak tiebreak_from_name(const std::string& name);

struct GroundState {
    StateVector vector;
    double energy = 0.0;
    bool degenerate = false;
    std::string selection_note;
};

HermitianOperator build_hamiltonian(const LmgParams& p);

// Same formula evaluated on caller-supplied collective operators. Used by the
// brute-force sector oracle, where the operators come from the projected
// tensor-product construction.
HermitianOperator build_hamiltonian(const LmgParams& p, const CollectiveOperators& ops);

// Parity Pi = exp(-i*pi*Jx), computed spectrally. Conjugation flips Jy and Jz
// and fixes Jx, so [H, Pi] = 0 for every parameter set.
ComplexMatrix parity_operator(HalfInteger j);

// Lowest eigenvector of the Hamiltonian. When the two lowest eigenvalues are
// closer than 1e-8 * ||H||, the returned state is resolved inside the
// two-dimensional ground space: max_jz maximizes <Jz> (symmetry-broken state
// for gamma < 1 quenches from h0 = 0), max_jx maximizes <Jx>, raw returns the
// solver's vector unmodified. For a unique ground state the tiebreak is
// silently ignored.
GroundState ground_state(const LmgParams& p, Tiebreak tiebreak);

// Same selection from an already computed spectrum of H, so sweeps can reuse a
// diagonalization across grid points.
GroundState select_ground_state(const Spectrum& spectrum, const HermitianOperator& hamiltonian,
                                HalfInteger j, Tiebreak tiebreak);

inline constexpr double kDegeneracyThreshold = 1e-8;  // times spectral norm of H

}  // namespace lmg
