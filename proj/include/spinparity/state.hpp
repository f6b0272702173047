#pragma once

// Density-matrix semantics for the spin-parity two-qubit space: validation,
// Fano (Bloch) decomposition and composition, partial transpose.
//
// Basis convention used everywhere in this library: computational basis
// |parity> (x) |spin>, ordered (|+,up>, |+,down>, |-,up>, |-,down>). Qubit 1 is
// the intrinsic parity, qubit 2 the spin.

#include <array>
#include <cmath>
#include <utility>

#include "spinparity/linalg.hpp"

namespace spinparity {

struct FanoDecomposition {
    Vec3 a1;    ///< parity-qubit Bloch vector
    Vec3 a2;    ///< spin-qubit Bloch vector
    Matrix3 T;  ///< correlation matrix t_ij = <sigma_i (x) sigma_j>
};

struct PartialTransposeDecomposition {
    Vec3 b1;    ///< (a1_x, -a1_y, a1_z)
    Vec3 b2;    ///< = a2
    Matrix3 Q;  ///< T with the y-row negated
};

/// A validated two-qubit state: Hermitian, unit trace, PSD (all within 1e-9).
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-9;
    static constexpr double kTraceTol = 1e-9;
    static constexpr double kPsdTol = -1e-9;

    /// Checks all three invariants and reports the first violated one.
    static DensityMatrix validate(const Matrix4& m) {
        const double herm = m.hermiticity_violation();
        if (herm > kHermTol) throw NotHermitian(herm);
        const double tr_err = std::abs(m.trace() - Complex(1.0));
        if (tr_err > kTraceTol) throw TraceNotOne(tr_err);
        const std::array<double, 4> ev = hermitian_eigenvalues4(m);
        if (ev[0] < kPsdTol) throw NotPositive(ev[0]);
        return DensityMatrix(m);
    }

    const Matrix4& matrix() const noexcept { return m_; }

    double purity() const { return trace_product(m_, m_).real(); }

    std::array<double, 4> eigenvalues() const { return hermitian_eigenvalues4(m_); }

private:
    explicit DensityMatrix(const Matrix4& m) : m_(m) {}
    Matrix4 m_;
};

inline DensityMatrix maximally_mixed() {
    return DensityMatrix::validate(0.25 * Matrix4::identity());
}

/// Pure state |psi><psi| from a (not necessarily normalized) amplitude vector.
inline DensityMatrix pure_state(const std::array<Complex, 4>& amp) {
    double n2 = 0.0;
    for (const Complex& a : amp) n2 += std::norm(a);
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = amp[i] * std::conj(amp[j]) / n2;
    return DensityMatrix::validate(r);
}

/// (|+,up> + |-,down>)/sqrt(2) projector: the maximally entangled reference.
inline DensityMatrix bell_phi_plus() {
    return pure_state({Complex(1), Complex(0), Complex(0), Complex(1)});
}

/// a1_i = Tr[rho (sigma_i (x) I)], a2_j = Tr[rho (I (x) sigma_j)],
/// t_ij = Tr[rho (sigma_i (x) sigma_j)]. Imaginary parts must stay below 1e-9.
inline FanoDecomposition fano_decompose(const DensityMatrix& rho) {
    const Matrix4& r = rho.matrix();
    const Matrix2 id = Matrix2::identity();

    FanoDecomposition f;
    double worst_imag = 0.0;
    auto expect = [&](const Matrix4& op) {
        const Complex e = trace_product(r, op);
        worst_imag = std::max(worst_imag, std::abs(e.imag()));
        return e.real();
    };

    for (std::size_t i = 0; i < 3; ++i) {
        f.a1[i] = expect(kron(pauli(i), id));
        f.a2[i] = expect(kron(id, pauli(i)));
        for (std::size_t j = 0; j < 3; ++j) f.T(i, j) = expect(kron(pauli(i), pauli(j)));
    }
    if (worst_imag > 1e-9) throw NonRealExpectation(worst_imag);
    return f;
}

/// rho = (1/4)[I + a1.(sigma (x) I) + a2.(I (x) sigma) + sum t_ij sigma_i (x) sigma_j].
/// Throws NotPositive when the supplied Fano data is non-physical.
inline DensityMatrix fano_compose(const FanoDecomposition& f) {
    const Matrix2 id = Matrix2::identity();
    Matrix4 r = Matrix4::identity();
    for (std::size_t i = 0; i < 3; ++i) {
        r = r + Complex(f.a1[i]) * kron(pauli(i), id);
        r = r + Complex(f.a2[i]) * kron(id, pauli(i));
        for (std::size_t j = 0; j < 3; ++j)
            r = r + Complex(f.T(i, j)) * kron(pauli(i), pauli(j));
    }
    return DensityMatrix::validate(0.25 * r);
}

/// Partial transpose over qubit 1 (parity): swaps the first-qubit indices,
/// <mu_i nu_j| rho^T1 |mu_k nu_l> = <mu_k nu_j| rho |mu_i nu_l>. The result is
/// Hermitian with unit trace but not necessarily PSD, so it is returned as a
/// raw matrix together with its (b1, b2, Q) sign-pattern decomposition.
inline std::pair<Matrix4, PartialTransposeDecomposition> partial_transpose_1(
    const DensityMatrix& rho) {
    const Matrix4& r = rho.matrix();
    Matrix4 pt;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    pt(2 * i + j, 2 * k + l) = r(2 * k + j, 2 * i + l);

    const FanoDecomposition f = fano_decompose(rho);
    PartialTransposeDecomposition d;
    d.b1 = Vec3{{f.a1[0], -f.a1[1], f.a1[2]}};
    d.b2 = f.a2;
    d.Q = f.T;
    for (std::size_t j = 0; j < 3; ++j) d.Q(1, j) = -d.Q(1, j);
    return {pt, d};
}

}  // namespace spinparity
