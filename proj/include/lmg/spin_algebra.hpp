#pragma once

#include <string>
#include <utility>

#include "lmg/linalg.hpp"

namespace lmg {

/// Total angular momentum j = N/2 stored exactly as 2j, so half-integers never round.
class HalfInteger {
public:
    explicit HalfInteger(int twice_j);

    static HalfInteger from_particle_count(int n) { return HalfInteger(n); }

    int twice() const { return twice_j_; }
    double value() const { return 0.5 * twice_j_; }
    int dim() const { return twice_j_ + 1; }

    /// Magnetic quantum number of basis index k, descending from +j to -j.
    double m(int k) const { return 0.5 * (twice_j_ - 2 * k); }

    bool operator==(const HalfInteger& other) const = default;

private:
    int twice_j_;
};

enum class GeneratorAxis { x, y, z };

const char* axis_name(GeneratorAxis axis);
GeneratorAxis axis_from_name(const std::string& name);

struct CollectiveOperators {
    HermitianOperator jx;
    HermitianOperator jy;
    HermitianOperator jz;

    const HermitianOperator& along(GeneratorAxis axis) const;
};

// Standard ladder-operator matrix elements in the |j,m> basis (m descending):
// Jz diagonal with entries m, J+/- off-diagonals sqrt(j(j+1) - m(m+-1)),
// Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i).
CollectiveOperators collective_operators(HalfInteger j);

/// Hermitian tridiagonal matrix stored as its real diagonal and complex
/// superdiagonal. The collective operators all have this shape in the Dicke
/// basis, which turns per-sample observables from O(d^2) into O(d).
struct TridiagonalHermitian {
    RealVector diag;
    ComplexVector super;   // length d-1; subdiagonal is its conjugate

    ComplexVector apply(const ComplexVector& psi) const;
    /// (<psi|A|psi>, <psi|A^2|psi>) in one pass.
    std::pair<double, double> moments(const ComplexVector& psi) const;
};

struct CollectiveTridiagonals {
    TridiagonalHermitian jx;
    TridiagonalHermitian jy;
    TridiagonalHermitian jz;

    const TridiagonalHermitian& along(GeneratorAxis axis) const;
};

CollectiveTridiagonals collective_tridiagonals(HalfInteger j);

// Validation oracle for the Dicke-basis restriction: builds sum_i sigma_l^i / 2
// on the full 2^N product space and projects onto the maximal-spin symmetric
// sector (dimension N+1). Must equal collective_operators(j=N/2) entrywise.
// N > 10 is rejected outright, the cost is 4^N.
HermitianOperator brute_force_symmetric_sector(int n_particles, GeneratorAxis axis);

}  // namespace lmg
