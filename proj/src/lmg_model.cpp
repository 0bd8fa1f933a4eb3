#include "lmg/lmg_model.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

namespace lmg {

LmgParams::LmgParams(double coupling_, double gamma_, double h_, HalfInteger j_)
    : coupling(coupling_), gamma(gamma_), h(h_), j(j_) {
    if (!(coupling > 0.0)) {
        throw ConfigError("LmgParams: coupling J must be positive, got " +
                          std::to_string(coupling));
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ConfigError("LmgParams: gamma must lie in [0,1], got " + std::to_string(gamma));
    }
    if (!std::isfinite(h)) {
        throw ConfigError("LmgParams: field h must be finite");
    }
    if (j.twice() < 1) {
        throw ConfigError("LmgParams: need j >= 1/2");
    }
}

const char* tiebreak_name(Tiebreak t) {
    switch (t) {
        case Tiebreak::max_jz: return "max-jz";
        case Tiebreak::max_jx: return "max-jx";
        case Tiebreak::raw: return "raw";
    }
    return "?";
}

Tiebreak tiebreak_from_name(const std::string& name) {
    if (name == "max-jz" || name == "max_jz") return Tiebreak::max_jz;
    if (name == "max-jx" || name == "max_jx") return Tiebreak::max_jx;
    if (name == "raw") return Tiebreak::raw;
    throw ConfigError("unknown tiebreak '" + name + "', expected max-jz, max-jx or raw");
}

HermitianOperator build_hamiltonian(const LmgParams& p) {
    return build_hamiltonian(p, collective_operators(p.j));
}

HermitianOperator build_hamiltonian(const LmgParams& p, const CollectiveOperators& ops) {
    const double scale = p.coupling / p.j.value();
    ComplexMatrix h = -scale * (ops.jz.matrix() * ops.jz.matrix() +
                                p.gamma * (ops.jy.matrix() * ops.jy.matrix())) -
                      2.0 * p.h * ops.jx.matrix();

    // In the Dicke basis Jz^2, Jy^2 and Jx are all real, so H must be too.
    const double max_imag = h.imag().cwiseAbs().maxCoeff();
    if (!(max_imag < 1e-12)) {
        throw NumericalError("build_hamiltonian: imaginary residue " + std::to_string(max_imag));
    }
    return HermitianOperator(std::move(h));
}

ComplexMatrix parity_operator(HalfInteger j) {
    const auto ops = collective_operators(j);
    const Spectrum spec = hermitian_eigendecomposition(ops.jx);
    return unitary_exp(spec, std::numbers::pi);
}

GroundState ground_state(const LmgParams& p, Tiebreak tiebreak) {
    const HermitianOperator h = build_hamiltonian(p);
    const Spectrum spec = hermitian_eigendecomposition(h);
    return select_ground_state(spec, h, p.j, tiebreak);
}

GroundState select_ground_state(const Spectrum& spectrum, const HermitianOperator& hamiltonian,
                                HalfInteger j, Tiebreak tiebreak) {
    if (hamiltonian.dim() != j.dim() || spectrum.eigenvalues.size() != j.dim()) {
        throw ConfigError("select_ground_state: dimension mismatch");
    }
    const int d = j.dim();
    const double scale = std::max(spectrum.spectral_norm(), DBL_MIN);

    GroundState gs;
    gs.energy = spectrum.eigenvalues(0);
    gs.vector = spectrum.eigenvectors.col(0);
    gs.selection_note = "unique ground state";

    double mixing_split = 0.0;
    const bool near_degenerate =
        d >= 2 &&
        (spectrum.eigenvalues(1) - spectrum.eigenvalues(0)) < kDegeneracyThreshold * scale;
    if (near_degenerate) {
        gs.degenerate = true;
        if (tiebreak == Tiebreak::raw) {
            gs.selection_note = "degenerate pair, raw solver vector";
        } else {
            const auto tridiags = collective_tridiagonals(j);
            const TridiagonalHermitian& target =
                (tiebreak == Tiebreak::max_jz) ? tridiags.jz : tridiags.jx;

            // Basis-independent tiebreak: diagonalize the 2x2 restriction of the
            // target operator in the ground space and take the top eigenvector.
            const ComplexVector v0 = spectrum.eigenvectors.col(0);
            const ComplexVector v1 = spectrum.eigenvectors.col(1);
            const ComplexVector tv0 = target.apply(v0);
            const ComplexVector tv1 = target.apply(v1);
            Eigen::Matrix2cd restricted;
            restricted(0, 0) = v0.dot(tv0);
            restricted(0, 1) = v0.dot(tv1);
            restricted(1, 0) = v1.dot(tv0);
            restricted(1, 1) = v1.dot(tv1);
            restricted = 0.5 * (restricted + restricted.adjoint()).eval();

            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> small(restricted);
            const Eigen::Vector2cd w = small.eigenvectors().col(1);
            gs.vector = (w(0) * v0 + w(1) * v1).normalized();
            gs.selection_note = std::string("degenerate pair resolved by max <J") +
                                (tiebreak == Tiebreak::max_jz ? "z" : "x") + ">";
            mixing_split = spectrum.eigenvalues(1) - spectrum.eigenvalues(0);
        }
    }

    const double residual =
        (hamiltonian.matrix() * gs.vector - gs.energy * gs.vector).norm();
    // The tiebreak may mix across the (sub-threshold) split, which shows up in
    // the residual; budget for it explicitly.
    if (!(residual <= tol::ground_residual * scale + mixing_split)) {
        throw NumericalError("ground_state: eigenpair residual " + std::to_string(residual) +
                             " exceeds tolerance at scale " + std::to_string(scale));
    }
    const double norm_dev = std::abs(gs.vector.norm() - 1.0);
    if (!(norm_dev <= 1e-12)) {
        throw NumericalError("ground_state: state norm deviates by " + std::to_string(norm_dev));
    }
    return gs;
}

}  // namespace lmg
