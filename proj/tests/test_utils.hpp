#pragma once

// Shared helpers for the test suites: deterministic random state generators
// (Ginibre density matrices, Haar pure states, random local unitaries) and
// small comparison utilities. All randomness is seeded per test case so runs
// are reproducible.

#include <array>
#include <cmath>
#include <random>

#include "spinparity/dirac.hpp"
#include "spinparity/state.hpp"

namespace sptest {

using spinparity::Complex;
using spinparity::CouplingParams;
using spinparity::DensityMatrix;
using spinparity::Matrix2;
using spinparity::Matrix4;
using spinparity::MixtureWeights;
using spinparity::Vec3;

using Rng = std::mt19937_64;

inline Complex gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return Complex(n(rng), n(rng));
}

/// Full-rank random state via the Ginibre construction G G† / Tr[G G†].
inline DensityMatrix random_density(Rng& rng) {
    Matrix4 g;
    for (std::size_t i = 0; i < 16; ++i) g.m[i] = gaussian(rng);
    Matrix4 r = g * g.adjoint();
    const double tr = r.trace().real();
    return DensityMatrix::validate((1.0 / tr) * r);
}

/// Haar-random pure state (normalized complex Gaussian amplitudes).
inline DensityMatrix random_pure(Rng& rng) {
    std::array<Complex, 4> amp;
    for (Complex& a : amp) a = gaussian(rng);
    return spinparity::pure_state(amp);
}

/// Haar-random SU(2) element.
inline Matrix2 random_su2(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double q[4] = {n(rng), n(rng), n(rng), n(rng)};
    double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (double& x : q) x /= norm;
    Matrix2 u;
    u(0, 0) = Complex(q[0], q[1]);
    u(0, 1) = Complex(q[2], q[3]);
    u(1, 0) = Complex(-q[2], q[3]);
    u(1, 1) = Complex(q[0], -q[1]);
    return u;
}

/// Random local unitary U1 (x) U2.
inline Matrix4 random_local_unitary(Rng& rng) {
    return kron(random_su2(rng), random_su2(rng));
}

/// Random Pauli-string unitary P_i (x) P_j (identity allowed on either slot).
inline Matrix4 random_pauli_string(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    auto factor = [&](int k) {
        return k == 3 ? Matrix2::identity() : spinparity::pauli(static_cast<std::size_t>(k));
    };
    return kron(factor(pick(rng)), factor(pick(rng)));
}

inline DensityMatrix conjugate(const DensityMatrix& rho, const Matrix4& u) {
    return DensityMatrix::validate(u * rho.matrix() * u.adjoint());
}

/// Random coupled-model parameters with a comfortably non-degenerate
/// spectrum (c2 bounded away from zero, no vanishing eigenvalue).
inline CouplingParams random_coupling(Rng& rng) {
    std::uniform_real_distribution<double> mag(0.2, 2.0);
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        CouplingParams cp;
        cp.m = mag(rng);
        cp.p_vec = Vec3{{n(rng), n(rng), n(rng)}};
        cp.B_vec = Vec3{{n(rng), n(rng), n(rng)}};
        cp.kappa = n(rng);
        cp.chi = n(rng);
        const double p2 = dot(cp.p_vec, cp.p_vec);
        const double B2 = dot(cp.B_vec, cp.B_vec);
        const double cpl2 = cp.kappa * cp.kappa + cp.chi * cp.chi;
        const Vec3 om = cross(cp.p_vec, cp.B_vec);
        const double c1 = p2 + cp.m * cp.m + B2 * cpl2;
        const double c2 = cp.m * cp.m * cp.kappa * cp.kappa * B2 + cpl2 * dot(om, om);
        if (c2 > 1e-6 && c1 - 2.0 * std::sqrt(c2) > 1e-2) return cp;
    }
}

inline MixtureWeights random_weights(Rng& rng) {
    std::exponential_distribution<double> ex(1.0);
    double w[4], sum = 0.0;
    for (double& x : w) {
        x = ex(rng);
        sum += x;
    }
    // renormalize exactly so the sum-to-one invariant holds to machine precision
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        w[i] /= sum;
        acc += w[i];
    }
    w[3] = 1.0 - acc;
    return MixtureWeights(w[0], w[1], w[2], w[3]);
}

inline double max_fano_diff(const spinparity::FanoDecomposition& a,
                            const spinparity::FanoDecomposition& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(a.a1[i] - b.a1[i]));
        worst = std::max(worst, std::abs(a.a2[i] - b.a2[i]));
        for (std::size_t j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(a.T(i, j) - b.T(i, j)));
    }
    return worst;
}

}  // namespace sptest
