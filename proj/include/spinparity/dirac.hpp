#pragma once

// Constructors for the physical states: free-particle helicity mixtures and
// eigenstates/mixtures of the Dirac Hamiltonian with tensor (kappa) and
// pseudotensor (chi) couplings to a homogeneous field. Natural units
// (hbar = c = 1) throughout; sweeps are parameterized by dimensionless
// ratios m/p, B/p, beta*p.

#include <array>
#include <cmath>
#include <numbers>

#include "spinparity/quantifiers.hpp"
#include "spinparity/state.hpp"

namespace spinparity {

// ---------------------------------------------------------------------------
// free particle (helicity mixtures)
// ---------------------------------------------------------------------------

struct FreeParams {
    double m = 1.0;  ///< mass (>= 0; the massless limit is allowed)
    double p = 0.0;  ///< momentum magnitude
    double A = 0.5;  ///< weight of the positive-helicity projector

    double energy() const { return std::hypot(m, p); }
    double m_over_E() const { return m / energy(); }

    FreeParams(double m_, double p_, double A_) : m(m_), p(p_), A(A_) {
        if (!(m >= 0.0) || !(p >= 0.0) || energy() <= 0.0)
            throw ConfigError("free_params", "need m >= 0, p >= 0, E > 0");
        if (!(A >= 0.0 && A <= 1.0)) throw ConfigError("A", "mixing weight must lie in [0,1]");
    }

    /// Canonical parameterization on the unit-energy shell: m = c, p = sqrt(1-c^2).
    static FreeParams from_ratio(double A, double m_over_E) {
        if (!(m_over_E >= 0.0 && m_over_E <= 1.0))
            throw ConfigError("m_over_E", "ratio must lie in [0,1]");
        const double c = m_over_E;
        return FreeParams(c, std::sqrt(std::max(0.0, 1.0 - c * c)), A);
    }
};

/// Pure projector onto the positive (sign=+1) or negative (sign=-1) helicity
/// solution in the canonical frame p = p z_hat:
///   |psi_sign> = sqrt((E+m)/2E) |+, h_sign> + sign * sqrt((E-m)/2E) |-, h_sign>,
/// with |h_+> = |up>, |h_-> = |down>.
inline DensityMatrix helicity_state(int sign, const FreeParams& fp) {
    if (fp.p <= 0.0) throw ZeroMomentum();
    const double E = fp.energy();
    const double big = std::sqrt((E + fp.m) / (2.0 * E));
    const double small = std::sqrt((E - fp.m) / (2.0 * E));
    if (sign >= 0) return pure_state({Complex(big), 0, Complex(small), 0});
    return pure_state({0, Complex(big), 0, Complex(-small)});
}

/// Mixed helicity state A |psi_+><psi_+| + (1-A) |psi_-><psi_-|, written out
/// entrywise (the weighted-projector construction is the cross-check path).
inline DensityMatrix rho_free(const FreeParams& fp) {
    const double E = fp.energy();
    const double bb = (E + fp.m) / (2.0 * E);
    const double aa = (E - fp.m) / (2.0 * E);
    const double ab = std::sqrt(E * E - fp.m * fp.m) / (2.0 * E);
    const double A = fp.A;

    Matrix4 r;
    r(0, 0) = A * bb;
    r(2, 2) = A * aa;
    r(0, 2) = r(2, 0) = A * ab;
    r(1, 1) = (1.0 - A) * bb;
    r(3, 3) = (1.0 - A) * aa;
    r(1, 3) = r(3, 1) = -(1.0 - A) * ab;
    return DensityMatrix::validate(r);
}

/// Closed-form geometric discord of rho_free as a function of (A, m/E).
inline double discord_free_closed_form(const FreeParams& fp) {
    const double c2 = fp.m_over_E() * fp.m_over_E();
    const double u = (1.0 - 2.0 * fp.A) * (1.0 - 2.0 * fp.A);
    const double x = 1.0 + u * c2;
    const double disc = std::max(0.0, x * x - 4.0 * (1.0 - c2) * c2);
    return 0.25 * (x - std::sqrt(disc));
}

/// Closed-form Bell function of rho_free: (1 - 4A(1-A) m^2/E^2)^2 - 1.
inline double bell_free_closed_form(const FreeParams& fp) {
    const double c2 = fp.m_over_E() * fp.m_over_E();
    const double k = 1.0 - 4.0 * fp.A * (1.0 - fp.A) * c2;
    return k * k - 1.0;
}

/// m/E ratio maximizing the closed-form discord: sqrt(2(1-A)/(5-8A+4A^2)).
inline double m_max_closed_form(double A) {
    if (!(A >= 0.0 && A <= 1.0)) throw ConfigError("A", "mixing weight must lie in [0,1]");
    return std::sqrt(2.0 * (1.0 - A) / (5.0 - 8.0 * A + 4.0 * A * A));
}

// ---------------------------------------------------------------------------
// tensor / pseudotensor coupling
// ---------------------------------------------------------------------------

enum class FieldKind { magnetic, electric };

struct CouplingParams {
    double m = 1.0;
    Vec3 p_vec{};                               ///< momentum
    Vec3 B_vec{};                               ///< field (magnetic or electric role)
    double kappa = 1.0;                         ///< tensor coupling
    double chi = 1.0;                           ///< pseudotensor coupling
    FieldKind field_kind = FieldKind::magnetic;
    double theta = std::numbers::pi / 4;        ///< p-field angle of the canonical frame

    /// Canonical frame: p = p x_hat, field = B (cos theta, sin theta, 0).
    static CouplingParams canonical(double m_over_p, double B_over_p = 1.0, double kappa = 1.0,
                                    double chi = 1.0, double theta = std::numbers::pi / 4,
                                    double p = 1.0) {
        CouplingParams cp;
        cp.m = m_over_p * p;
        cp.p_vec = Vec3{{p, 0.0, 0.0}};
        cp.B_vec = B_over_p * p * Vec3{{std::cos(theta), std::sin(theta), 0.0}};
        cp.kappa = kappa;
        cp.chi = chi;
        cp.theta = theta;
        return cp;
    }
};

struct SpectralData {
    double c1;                       ///< energy^2 invariant
    double c2;                       ///< energy^4 invariant (non-degeneracy requires c2 > 0)
    Vec3 omega;                      ///< p x B
    std::array<double, 4> lambdas;   ///< lambda_{n,s}, index 2n + s
    Matrix4 O_matrix;                ///< the operator with O^2 = c2 I

    double lambda(int n, int s) const { return lambdas[2 * n + s]; }
    double lambda_min() const {
        double lo = lambdas[0];
        for (double l : lambdas) lo = std::min(lo, l);
        return lo;
    }
    /// Gap between the two lowest levels.
    double ground_gap() const {
        std::array<double, 4> s = lambdas;
        std::sort(s.begin(), s.end());
        return s[1] - s[0];
    }
};

struct MixtureWeights {
    std::array<double, 4> A_ns{0.25, 0.25, 0.25, 0.25};  ///< index 2n + s

    MixtureWeights() = default;
    MixtureWeights(double a00, double a01, double a10, double a11) : A_ns{a00, a01, a10, a11} {
        double sum = 0.0;
        for (double a : A_ns) {
            if (a < 0.0) throw ConfigError("weights", "mixture weights must be nonnegative");
            sum += a;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw ConfigError("weights", "mixture weights must sum to one");
    }
    double operator()(int n, int s) const { return A_ns[2 * n + s]; }
};

struct MixtureCoefficients {
    double g1;  ///< sum A_ns / lambda_ns
    double g2;  ///< (1/sqrt(c2)) sum (-1)^s A_ns
    double g3;  ///< (1/sqrt(c2)) sum (-1)^s A_ns / lambda_ns
};

/// H = (sigma_z (x) I) m + (sigma_x (x) sigma).p + kappa (sigma_z (x) sigma).B
///     - chi (sigma_y (x) sigma).B, with B replaced by the electric field
/// vector for electric-kind parameters.
inline Matrix4 hamiltonian_matrix(const CouplingParams& cp) {
    const Matrix2 id = Matrix2::identity();
    Matrix4 h = Complex(cp.m) * kron(pauli_z(), id);
    h = h + kron(pauli_x(), sigma_dot(cp.p_vec));
    h = h + Complex(cp.kappa) * kron(pauli_z(), sigma_dot(cp.B_vec));
    h = h - Complex(cp.chi) * kron(pauli_y(), sigma_dot(cp.B_vec));
    return h;
}

/// Spectral invariants and the O operator:
///   c1 = p^2 + m^2 + B^2 (kappa^2 + chi^2),
///   c2 = m^2 kappa^2 B^2 + (kappa^2 + chi^2) |p x B|^2,
///   O  = m kappa Sigma.B + chi beta Sigma.omega - i kappa beta alpha.omega,
///   lambda_{n,s} = (-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2)).
inline SpectralData spectral_data(const CouplingParams& cp) {
    SpectralData sd;
    const double p2 = dot(cp.p_vec, cp.p_vec);
    const double B2 = dot(cp.B_vec, cp.B_vec);
    const double cpl2 = cp.kappa * cp.kappa + cp.chi * cp.chi;
    sd.omega = cross(cp.p_vec, cp.B_vec);
    sd.c1 = p2 + cp.m * cp.m + B2 * cpl2;
    sd.c2 = cp.m * cp.m * cp.kappa * cp.kappa * B2 + cpl2 * dot(sd.omega, sd.omega);
    if (sd.c2 <= 1e-12) throw DegenerateSpectrum(sd.c2);

    const double root_c2 = std::sqrt(sd.c2);
    for (int n = 0; n < 2; ++n)
        for (int s = 0; s < 2; ++s)
            sd.lambdas[2 * n + s] =
                (n == 0 ? 1.0 : -1.0) * std::sqrt(sd.c1 + 2.0 * (s == 0 ? 1.0 : -1.0) * root_c2);

    const Matrix2 id = Matrix2::identity();
    // beta Sigma = sigma_z (x) sigma ; beta alpha = i sigma_y (x) sigma
    Matrix4 o = Complex(cp.m * cp.kappa) * kron(id, sigma_dot(cp.B_vec));
    o = o + Complex(cp.chi) * kron(pauli_z(), sigma_dot(sd.omega));
    o = o + Complex(cp.kappa) * kron(pauli_y(), sigma_dot(sd.omega));
    sd.O_matrix = o;
    return sd;
}

/// Pure eigenstate projector of the non-degenerate spectrum,
///   rho_{n,s} ~ [I + (-1)^n H / |lambda_{n,s}|][I + (-1)^s O / sqrt(c2)],
/// normalized by its trace.
inline DensityMatrix eigenstate_density(const CouplingParams& cp, int n, int s) {
    const SpectralData sd = spectral_data(cp);
    const Matrix4 h = hamiltonian_matrix(cp);
    const double lam = sd.lambda(n, s);
    if (std::abs(lam) < 1e-9) throw DegenerateSpectrum(sd.c2);

    const Matrix4 left =
        Matrix4::identity() + Complex((n == 0 ? 1.0 : -1.0) / std::abs(lam)) * h;
    const Matrix4 right =
        Matrix4::identity() + Complex((s == 0 ? 1.0 : -1.0) / std::sqrt(sd.c2)) * sd.O_matrix;
    Matrix4 raw = left * right;
    const double tr = raw.trace().real();
    if (tr < 1e-10) throw NormalizationFailure(tr);
    return DensityMatrix::validate((1.0 / tr) * raw);
}

/// sum_{n,s} A_ns rho_{n,s}
inline DensityMatrix mixture_state(const CouplingParams& cp, const MixtureWeights& w) {
    Matrix4 r;
    for (int n = 0; n < 2; ++n)
        for (int s = 0; s < 2; ++s) {
            if (w(n, s) == 0.0) continue;
            r = r + Complex(w(n, s)) * eigenstate_density(cp, n, s).matrix();
        }
    return DensityMatrix::validate(r);
}

inline MixtureCoefficients mixture_coefficients(const SpectralData& sd,
                                                const MixtureWeights& w) {
    MixtureCoefficients g{0.0, 0.0, 0.0};
    const double root_c2 = std::sqrt(sd.c2);
    for (int n = 0; n < 2; ++n)
        for (int s = 0; s < 2; ++s) {
            const double sgn_s = (s == 0 ? 1.0 : -1.0);
            g.g1 += w(n, s) / sd.lambda(n, s);
            g.g2 += sgn_s * w(n, s) / root_c2;
            g.g3 += sgn_s * w(n, s) / (sd.lambda(n, s) * root_c2);
        }
    return g;
}

/// Bloch vectors and correlation matrix of the mixture directly from the
/// g1/g2/g3 coefficients, i.e. from rho = (1/4)[I + g1 H + g2 O + g3 H O]
/// expanded in the Pauli basis. This is the closed-form side of the module's
/// two-path oracle (the other side being fano_decompose(mixture_state)).
inline FanoDecomposition fano_from_formula(const CouplingParams& cp, const MixtureWeights& w) {
    const SpectralData sd = spectral_data(cp);
    const MixtureCoefficients g = mixture_coefficients(sd, w);
    const Vec3& p = cp.p_vec;
    const Vec3& B = cp.B_vec;
    const Vec3& om = sd.omega;
    const double B2 = dot(B, B);
    const double kappa = cp.kappa, chi = cp.chi, m = cp.m;

    FanoDecomposition f;
    f.a1 = Vec3{{g.g3 * m * kappa * dot(p, B),
                 -g.g3 * m * kappa * chi * B2,
                 g.g1 * m + g.g3 * m * kappa * kappa * B2}};
    f.a2 = g.g2 * m * kappa * B + g.g3 * m * chi * om;

    const Vec3 row_x = g.g1 * p + (g.g3 * (kappa * kappa + chi * chi)) * cross(B, om);
    const Vec3 row_y = -g.g1 * chi * B + g.g2 * kappa * om + g.g3 * chi * cross(p, om);
    const Vec3 row_z =
        g.g1 * kappa * B + g.g2 * chi * om + g.g3 * kappa * (m * m * B - cross(p, om));
    for (std::size_t j = 0; j < 3; ++j) {
        f.T(0, j) = row_x[j];
        f.T(1, j) = row_y[j];
        f.T(2, j) = row_z[j];
    }
    return f;
}

/// Coupling map of the magnetic -> electric substitution:
/// (kappa, chi) -> (chi, -kappa). Applying it twice flips the sign of both
/// couplings, which leaves c1 and c2 (hence the spectrum) unchanged.
inline std::pair<double, double> substituted_couplings(double kappa, double chi) {
    return {chi, -kappa};
}

/// Reinterprets the field vector as a true (parity-odd) electric field and
/// swaps the coupling roles accordingly.
inline CouplingParams electric_substitution(const CouplingParams& cp) {
    if (cp.field_kind == FieldKind::electric) throw AlreadyElectric();
    CouplingParams out = cp;
    const auto [k, x] = substituted_couplings(cp.kappa, cp.chi);
    out.kappa = k;
    out.chi = x;
    out.field_kind = FieldKind::electric;
    return out;
}

}  // namespace spinparity
