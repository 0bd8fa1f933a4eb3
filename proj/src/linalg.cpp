#include "lmg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace lmg {

namespace {

// Largest |A(r,c) - conj(A(c,r))| together with its location.
struct AsymmetryReport {
    double value = 0.0;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
};

AsymmetryReport max_asymmetry(const ComplexMatrix& m) {
    AsymmetryReport rep;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = r; c < m.cols(); ++c) {
            const double dev = std::abs(m(r, c) - std::conj(m(c, r)));
            if (dev > rep.value) rep = {dev, r, c};
        }
    }
    return rep;
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) {
        throw ConfigError("HermitianOperator: matrix is not square");
    }
    const auto rep = max_asymmetry(mat_);
    if (!(rep.value <= tol::hermiticity)) {
        std::ostringstream os;
        os << "HermitianOperator: not Hermitian, worst entry (" << rep.row << "," << rep.col
           << ") deviates by " << rep.value;
        throw ConfigError(os.str());
    }
}

Spectrum hermitian_eigendecomposition(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigendecomposition: solver did not converge");
    }
    Spectrum spec{solver.eigenvalues(), solver.eigenvectors()};

    const auto d = a.dim();
    const ComplexMatrix& v = spec.eigenvectors;
    const double ortho = (v.adjoint() * v - ComplexMatrix::Identity(d, d)).norm();
    if (!(ortho <= tol::orthonormality)) {
        throw NumericalError("hermitian_eigendecomposition: eigenvectors not orthonormal, "
                             "Frobenius defect " + std::to_string(ortho));
    }
    const double anorm = a.matrix().norm();
    const double resid =
        (v * spec.eigenvalues.asDiagonal() * v.adjoint() - a.matrix()).norm();
    if (anorm > 0.0 && !(resid / anorm <= tol::reconstruction)) {
        throw NumericalError("hermitian_eigendecomposition: reconstruction residual " +
                             std::to_string(resid / anorm));
    }
    return spec;
}

Spectrum hermitian_eigendecomposition(const ComplexMatrix& a) {
    return hermitian_eigendecomposition(HermitianOperator(a));
}

namespace {

double abs_eigenvalue_sum(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("trace_norm: eigenvalue iteration did not converge");
    }
    return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace

double trace_norm(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ConfigError("trace_norm: matrix is not square");
    }
    if (a.size() == 0) return 0.0;

    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double anti_defect = (a + a.adjoint()).cwiseAbs().maxCoeff();
    if (anti_defect <= tol::hermiticity * scale) {
        return abs_eigenvalue_sum(Complex(0.0, 1.0) * a);
    }
    const double herm_defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect <= tol::hermiticity * scale) {
        return abs_eigenvalue_sum(a);
    }
    return singular_value_sum(a);
}

double singular_value_sum(const ComplexMatrix& a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues().sum();
}

ComplexMatrix unitary_exp(const Spectrum& spec, double theta) {
    const auto d = spec.eigenvalues.size();
    ComplexVector phases(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        phases(k) = std::exp(Complex(0.0, -theta * spec.eigenvalues(k)));
    }
    return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

void require_density_matrix(const HermitianOperator& rho) {
    const double trace_dev = std::abs(rho.matrix().trace() - Complex(1.0, 0.0));
    if (!(trace_dev <= tol::density_trace)) {
        throw ConfigError("density matrix: trace deviates from 1 by " +
                          std::to_string(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (!(min_eig >= -tol::density_negativity)) {
        throw ConfigError("density matrix: most negative eigenvalue " +
                          std::to_string(min_eig));
    }
}

}  // namespace lmg
