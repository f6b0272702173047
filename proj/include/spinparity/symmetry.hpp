#pragma once

// C, P and CP transformations of states and parameters, each implemented at
// both the matrix level and the Fano sign-rule level so the two act as mutual
// oracles, plus the CP-asymmetry diagnostic on the coupled-mixture family.
//
// The antiunitary pieces take the complex conjugate entrywise in the fixed
// computational basis of state.hpp; the i phases of the spinor-level maps
// cancel inside density-matrix conjugation and are omitted.

#include <cmath>

#include "spinparity/dirac.hpp"
#include "spinparity/thermal.hpp"

namespace spinparity {

enum class Transform { P, C, CP };

/// Parameter reflection X -> X~: all true vectors flip sign. The momentum is
/// always a true vector; a magnetic field is axial and keeps its sign while
/// an electric field flips. Involutive by construction.
using ReflectedParams = CouplingParams;

inline ReflectedParams params_reflect(const CouplingParams& cp) {
    ReflectedParams out = cp;
    out.p_vec = -cp.p_vec;
    if (cp.field_kind == FieldKind::electric) out.B_vec = -cp.B_vec;
    return out;
}

/// Free-particle parameters carry no vector degrees of freedom (only m and
/// E_p), so reflection is the identity on them.
inline FreeParams params_reflect(const FreeParams& fp) { return fp; }

/// P: rho -> (sigma_z (x) I) rho (sigma_z (x) I). Unitary, spectrum preserved.
inline DensityMatrix parity_transform(const DensityMatrix& rho) {
    const Matrix4 u = kron(pauli_z(), Matrix2::identity());
    return DensityMatrix::validate(u * rho.matrix() * u);
}

/// C: rho -> (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y). A spin-flip on
/// both qubits; leaves every correlation quantifier unchanged.
inline DensityMatrix charge_conjugation(const DensityMatrix& rho) {
    const Matrix4 u = kron(pauli_y(), pauli_y());
    return DensityMatrix::validate(u * rho.matrix().conjugated() * u);
}

/// CP: rho -> (sigma_x (x) sigma_y) rho* (sigma_x (x) sigma_y).
inline DensityMatrix cp_transform(const DensityMatrix& rho) {
    const Matrix4 u = kron(pauli_x(), pauli_y());
    return DensityMatrix::validate(u * rho.matrix().conjugated() * u);
}

/// The tabulated sign rules applied directly to (a1, a2, T):
///   P : a1 -> (-x, -y, +z),  a2 -> a2,   T -> Diag{-1,-1,+1} T
///   C : a1 -> -a1,           a2 -> -a2,  T -> T
///   CP: a1 -> (+x, +y, -z),  a2 -> -a2,  T -> Diag{-1,-1,+1} T
inline FanoDecomposition fano_transform_oracle(const FanoDecomposition& f, Transform which) {
    FanoDecomposition out = f;
    switch (which) {
        case Transform::P:
            out.a1 = Vec3{{-f.a1[0], -f.a1[1], f.a1[2]}};
            for (std::size_t j = 0; j < 3; ++j) {
                out.T(0, j) = -f.T(0, j);
                out.T(1, j) = -f.T(1, j);
            }
            break;
        case Transform::C:
            out.a1 = -f.a1;
            out.a2 = -f.a2;
            break;
        case Transform::CP:
            out.a1 = Vec3{{f.a1[0], f.a1[1], -f.a1[2]}};
            out.a2 = -f.a2;
            for (std::size_t j = 0; j < 3; ++j) {
                out.T(0, j) = -f.T(0, j);
                out.T(1, j) = -f.T(1, j);
            }
            break;
    }
    return out;
}

/// Matrix-level transform matching fano_transform_oracle, for oracle tests.
inline DensityMatrix apply_transform(const DensityMatrix& rho, Transform which) {
    switch (which) {
        case Transform::P: return parity_transform(rho);
        case Transform::C: return charge_conjugation(rho);
        default: return cp_transform(rho);
    }
}

/// |D[rho^CP] - D[rho]| with rho = mixture_state(cp, w) and rho^CP the CP
/// matrix transform of the mixture built at the reflected parameters.
inline double cp_discord_difference(const CouplingParams& cp, const MixtureWeights& w,
                                    int side = 1) {
    const DensityMatrix rho = mixture_state(cp, w);
    const DensityMatrix rho_cp = cp_transform(mixture_state(params_reflect(cp), w));
    return std::abs(geometric_discord(rho_cp, side) - geometric_discord(rho, side));
}

/// Thermal-state variant of the CP discord difference.
inline double cp_discord_difference_thermal(const CouplingParams& cp, const ThermalParams& tp,
                                            int side = 1) {
    const DensityMatrix rho = gibbs_state(cp, tp);
    const DensityMatrix rho_cp = cp_transform(gibbs_state(params_reflect(cp), tp));
    return std::abs(geometric_discord(rho_cp, side) - geometric_discord(rho, side));
}

}  // namespace spinparity
