#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lmg/errors.hpp"

namespace lmg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Normalized complex vector in the Dicke basis. Norm contracts are checked
// where operations require them, not on every copy.
using StateVector = ComplexVector;

namespace tol {
inline constexpr double hermiticity = 1e-12;        // per entry, absolute
inline constexpr double orthonormality = 1e-10;     // Frobenius
inline constexpr double reconstruction = 1e-10;     // Frobenius, relative
inline constexpr double density_trace = 1e-10;
inline constexpr double density_negativity = 1e-10;
inline constexpr double state_norm = 1e-10;
inline constexpr double energy_drift = 1e-9;        // relative
inline constexpr double ground_residual = 1e-9;     // relative to spectral norm
}  // namespace tol

/// Dense complex square matrix with a Hermiticity contract checked at construction.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
};

/// Eigenvalues ascending; column k of eigenvectors is the unit eigenvector of
/// eigenvalue k. The solver is a pure function of its input bits, so degenerate
/// subspaces get a fixed, reproducible basis.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    double spectral_norm() const {
        if (eigenvalues.size() == 0) return 0.0;
        return std::max(std::abs(eigenvalues(0)), std::abs(eigenvalues(eigenvalues.size() - 1)));
    }
};

// Householder tridiagonalization + implicit QR with Wilkinson shifts (Eigen's
// SelfAdjointEigenSolver). Orthonormality and reconstruction residuals are
// verified before returning; failure throws NumericalError.
Spectrum hermitian_eigendecomposition(const HermitianOperator& a);

// Convenience overload: validates Hermiticity first (ConfigError on failure,
// diagnostic names the worst entry).
Spectrum hermitian_eigendecomposition(const ComplexMatrix& a);

// Sum of singular values, Tr sqrt(A^dag A). Anti-Hermitian and Hermitian inputs
// are detected and routed through the Hermitian eigensolver (sum of |eigenvalues|);
// everything else goes through the SVD path.
double trace_norm(const ComplexMatrix& a);

// Always the SVD route, kept as an independent cross-check of trace_norm.
double singular_value_sum(const ComplexMatrix& a);

// exp(-i * theta * A) from the spectrum of Hermitian A.
ComplexMatrix unitary_exp(const Spectrum& spec, double theta);

// Checks positive semidefiniteness (within tol::density_negativity) and unit
// trace (within tol::density_trace). Throws ConfigError with the trace deviation
// or the most negative eigenvalue.
void require_density_matrix(const HermitianOperator& rho);

}  // namespace lmg
