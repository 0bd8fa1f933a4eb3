#include "lmg/spin_algebra.hpp"

#include <cmath>
#include <vector>

namespace lmg {

HalfInteger::HalfInteger(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) {
        throw ConfigError("HalfInteger: 2j must be non-negative, got " +
                          std::to_string(twice_j));
    }
}

const char* axis_name(GeneratorAxis axis) {
    switch (axis) {
        case GeneratorAxis::x: return "x";
        case GeneratorAxis::y: return "y";
        case GeneratorAxis::z: return "z";
    }
    return "?";
}

GeneratorAxis axis_from_name(const std::string& name) {
    if (name == "x") return GeneratorAxis::x;
    if (name == "y") return GeneratorAxis::y;
    if (name == "z") return GeneratorAxis::z;
    throw ConfigError("unknown generator axis '" + name + "', expected x, y or z");
}

const HermitianOperator& CollectiveOperators::along(GeneratorAxis axis) const {
    switch (axis) {
        case GeneratorAxis::x: return jx;
        case GeneratorAxis::y: return jy;
        case GeneratorAxis::z: return jz;
    }
    return jz;
}

CollectiveOperators collective_operators(HalfInteger j) {
    const int d = j.dim();
    const double jj = j.value() * (j.value() + 1.0);

    ComplexMatrix jx = ComplexMatrix::Zero(d, d);
    ComplexMatrix jy = ComplexMatrix::Zero(d, d);
    ComplexMatrix jz = ComplexMatrix::Zero(d, d);

    for (int k = 0; k < d; ++k) {
        jz(k, k) = j.m(k);
    }
    // J+ raises m, which moves one basis index up (toward index 0).
    for (int k = 1; k < d; ++k) {
        const double m = j.m(k);
        const double raise = std::sqrt(jj - m * (m + 1.0));
        jx(k - 1, k) += 0.5 * raise;
        jx(k, k - 1) += 0.5 * raise;
        jy(k - 1, k) += Complex(0.0, -0.5) * raise;
        jy(k, k - 1) += Complex(0.0, 0.5) * raise;
    }

    return CollectiveOperators{HermitianOperator(std::move(jx)),
                               HermitianOperator(std::move(jy)),
                               HermitianOperator(std::move(jz))};
}

ComplexVector TridiagonalHermitian::apply(const ComplexVector& psi) const {
    const auto d = diag.size();
    ComplexVector out(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        Complex acc = diag(i) * psi(i);
        if (i + 1 < d) acc += super(i) * psi(i + 1);
        if (i > 0) acc += std::conj(super(i - 1)) * psi(i - 1);
        out(i) = acc;
    }
    return out;
}

std::pair<double, double> TridiagonalHermitian::moments(const ComplexVector& psi) const {
    const auto d = diag.size();
    Complex mean(0.0, 0.0);
    double second = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        Complex acc = diag(i) * psi(i);
        if (i + 1 < d) acc += super(i) * psi(i + 1);
        if (i > 0) acc += std::conj(super(i - 1)) * psi(i - 1);
        mean += std::conj(psi(i)) * acc;
        second += std::norm(acc);
    }
    return {mean.real(), second};
}

const TridiagonalHermitian& CollectiveTridiagonals::along(GeneratorAxis axis) const {
    switch (axis) {
        case GeneratorAxis::x: return jx;
        case GeneratorAxis::y: return jy;
        case GeneratorAxis::z: return jz;
    }
    return jz;
}

CollectiveTridiagonals collective_tridiagonals(HalfInteger j) {
    const int d = j.dim();
    const double jj = j.value() * (j.value() + 1.0);

    CollectiveTridiagonals t{{RealVector::Zero(d), ComplexVector::Zero(d - 1)},
                             {RealVector::Zero(d), ComplexVector::Zero(d - 1)},
                             {RealVector::Zero(d), ComplexVector::Zero(d - 1)}};
    for (int k = 0; k < d; ++k) t.jz.diag(k) = j.m(k);
    for (int k = 1; k < d; ++k) {
        const double m = j.m(k);
        const double raise = std::sqrt(jj - m * (m + 1.0));
        t.jx.super(k - 1) = 0.5 * raise;
        t.jy.super(k - 1) = Complex(0.0, -0.5) * raise;
    }
    return t;
}

namespace {

ComplexMatrix pauli_half(GeneratorAxis axis) {
    ComplexMatrix s(2, 2);
    switch (axis) {
        case GeneratorAxis::x:
            s << 0.0, 0.5, 0.5, 0.0;
            break;
        case GeneratorAxis::y:
            s << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0;
            break;
        case GeneratorAxis::z:
            s << 0.5, 0.0, 0.0, -0.5;
            break;
    }
    return s;
}

int popcount(unsigned v) {
    int c = 0;
    for (; v; v >>= 1) c += static_cast<int>(v & 1u);
    return c;
}

}  // namespace

HermitianOperator brute_force_symmetric_sector(int n_particles, GeneratorAxis axis) {
    if (n_particles < 1 || n_particles > 10) {
        throw ConfigError("brute_force_symmetric_sector: N must be in [1,10], got " +
                          std::to_string(n_particles));
    }
    const int n = n_particles;
    const int full_dim = 1 << n;
    const ComplexMatrix s = pauli_half(axis);

    // Bit i of a basis index is spin i; bit 0 means up (m = +1/2).
    ComplexMatrix total = ComplexMatrix::Zero(full_dim, full_dim);
    for (int site = 0; site < n; ++site) {
        for (int col = 0; col < full_dim; ++col) {
            const int bit = (col >> site) & 1;
            for (int srow = 0; srow < 2; ++srow) {
                const Complex amp = s(srow, bit);
                if (amp == Complex(0.0, 0.0)) continue;
                const int row = (col & ~(1 << site)) | (srow << site);
                total(row, col) += amp;
            }
        }
    }

    // Dicke states: |j=N/2, m> is the uniform superposition of all bitstrings
    // with n_up = m + N/2 up spins, ordered m = +j down to -j.
    const int sector_dim = n + 1;
    ComplexMatrix proj = ComplexMatrix::Zero(full_dim, sector_dim);
    std::vector<int> counts(sector_dim, 0);
    for (int state = 0; state < full_dim; ++state) {
        const int n_down = popcount(static_cast<unsigned>(state));
        ++counts[n_down];
    }
    for (int state = 0; state < full_dim; ++state) {
        const int n_down = popcount(static_cast<unsigned>(state));
        proj(state, n_down) = 1.0 / std::sqrt(static_cast<double>(counts[n_down]));
    }

    ComplexMatrix projected = proj.adjoint() * total * proj;
    return HermitianOperator(std::move(projected));
}

}  // namespace lmg
