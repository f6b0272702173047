#pragma once

// The three correlation measures: negativity (entanglement), geometric
// discord (general quantum correlations) and the Horodecki Bell-CHSH
// quantifier (nonlocality), plus a brute-force CHSH maximizer that serves as
// an independent cross-check of the Horodecki closed form.

#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinparity/state.hpp"

namespace spinparity {

struct BellResult {
    double M;     ///< t1 + t2, the two largest eigenvalues of T^T T
    double B;     ///< M - 1; CHSH violated iff B > 0
    double chsh;  ///< 2 sqrt(M), the maximal CHSH mean value
};

struct CorrelationReport {
    double negativity;
    double discord1;    ///< measurement on qubit 1 (parity)
    double discord2;    ///< measurement on qubit 2 (spin)
    double locality_M;
    double bell_B;
    double chsh_value;
    double k_max1;
    double k_max2;
};

namespace detail {

inline std::atomic<long>& clamp_counter() {
    static std::atomic<long> n{0};
    return n;
}

/// Round-off guard: tiny negative quantifier values are clamped to zero and
/// counted; anything beyond round-off scale is a logic error upstream. The
/// first clamp is reported on stderr, later ones only bump the counter.
inline double clamp_nonnegative(double x, const char* what) {
    if (x >= 0.0) return x;
    if (x < -1e-8) throw std::logic_error(std::string(what) + " came out negative: " +
                                          std::to_string(x));
    if (clamp_counter().fetch_add(1, std::memory_order_relaxed) == 0)
        std::cerr << "spinparity: clamping " << what << " = " << x
                  << " to 0 (round-off; further clamps counted silently)\n";
    return 0.0;
}

}  // namespace detail

/// Number of round-off clamp events since process start (for tests).
inline long quantifier_clamp_count() { return detail::clamp_counter().load(); }

/// N = sum_i |mu_i| - 1 over the eigenvalues of rho^T1, clamped to [0, 1].
/// Two algebraically equal forms (trace norm vs. twice the negative part) are
/// evaluated and must agree to 1e-10.
inline double negativity(const DensityMatrix& rho) {
    const auto [pt, dec] = partial_transpose_1(rho);
    (void)dec;
    const std::array<double, 4> mu = hermitian_eigenvalues4(pt);
    double abs_sum = 0.0;
    double neg_sum = 0.0;
    for (double m : mu) {
        abs_sum += std::abs(m);
        if (m < 0.0) neg_sum += -m;
    }
    const double n1 = abs_sum - 1.0;
    const double n2 = 2.0 * neg_sum;
    if (std::abs(n1 - n2) > 1e-10)
        throw std::logic_error("negativity self-check failed: trace-norm and negative-part "
                               "forms disagree");
    return std::min(1.0, detail::clamp_nonnegative(n1, "negativity"));
}

/// D_side = (1/4)(a^2 + ||T||^2 - k_max) with k_max the largest eigenvalue of
/// a a^T + T T^T (side 1) or a a^T + T^T T (side 2).
inline double geometric_discord(const DensityMatrix& rho, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("discord side must be 1 or 2");
    const FanoDecomposition f = fano_decompose(rho);
    const Vec3& a = (side == 1) ? f.a1 : f.a2;
    const Matrix3 TT = (side == 1) ? f.T * f.T.transposed() : f.T.transposed() * f.T;
    const Matrix3 K = Matrix3::outer(a, a) + TT;
    const double k_max = sym_eigenvalues3(K.symmetrized())[2];
    const double d = 0.25 * (dot(a, a) + f.T.frobenius_sq() - k_max);
    return detail::clamp_nonnegative(d, "geometric discord");
}

/// Horodecki criterion: M = t1 + t2 with t1, t2 the two largest eigenvalues
/// of T^T T; the CHSH maximum is 2 sqrt(M) and violation means M > 1.
inline BellResult bell_horodecki(const DensityMatrix& rho) {
    const FanoDecomposition f = fano_decompose(rho);
    const Matrix3 U = (f.T.transposed() * f.T).symmetrized();
    const std::array<double, 3> t = sym_eigenvalues3(U);
    const double M = t[2] + t[1];
    return BellResult{M, M - 1.0, 2.0 * std::sqrt(std::max(0.0, M))};
}

namespace detail {

struct ChshObjective {
    // Correlators Tr[rho sigma_i (x) sigma_j], computed by direct matrix
    // traces so the maximizer stays independent of the Fano/Horodecki path.
    std::array<std::array<double, 3>, 3> t{};

    explicit ChshObjective(const DensityMatrix& rho) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                t[i][j] = trace_product(rho.matrix(), kron(pauli(i), pauli(j))).real();
    }

    static Vec3 unit(double th, double ph) {
        return Vec3{{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)}};
    }

    double corr(const Vec3& a, const Vec3& b) const {
        double s = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s += a[i] * t[i][j] * b[j];
        return s;
    }

    /// |Tr[B rho]| for B = A1(B1+B2) + A2(B1-B2) in correlator form.
    double operator()(const std::array<double, 8>& ang) const {
        const Vec3 a1 = unit(ang[0], ang[1]);
        const Vec3 a2 = unit(ang[2], ang[3]);
        const Vec3 b1 = unit(ang[4], ang[5]);
        const Vec3 b2 = unit(ang[6], ang[7]);
        return std::abs(corr(a1, b1) + corr(a1, b2) + corr(a2, b1) - corr(a2, b2));
    }
};

inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 int iters) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

/// Deterministic brute-force CHSH maximum: the four measurement axes are scanned
/// on a theta x phi grid (grid_n x 2 grid_n, one vector at a time, lowest
/// grid index winning ties), then all eight angles are polished by cyclic
/// golden-section passes. Always a lower bound on the true maximum.
inline double chsh_brute_force(const DensityMatrix& rho, int grid_n = 24,
                               int refine_iters = 50) {
    if (grid_n < 12) throw std::invalid_argument("chsh_brute_force needs grid_n >= 12");
    const detail::ChshObjective obj(rho);
    constexpr double pi = std::numbers::pi;

    const std::array<std::array<double, 8>, 5> starts{{
        {pi / 2, 0, pi / 2, pi / 2, pi / 2, pi / 4, pi / 2, 3 * pi / 4},
        {0, 0, pi / 2, 0, pi / 4, 0, 3 * pi / 4, 0},
        {pi / 2, pi / 2, 0, 0, pi / 4, pi / 2, 3 * pi / 4, pi / 2},
        {pi / 3, pi / 3, 2 * pi / 3, 4 * pi / 3, pi / 3, 5 * pi / 3, 2 * pi / 3, 2 * pi / 3},
        {pi / 5, 7 * pi / 5, 4 * pi / 5, pi / 5, 3 * pi / 5, 6 * pi / 5, 2 * pi / 5, 9 * pi / 5},
    }};

    double best_overall = 0.0;
    for (const auto& start : starts) {
        std::array<double, 8> ang = start;

        // grid stage: optimize one measurement axis at a time
        for (int cycle = 0; cycle < 3; ++cycle) {
            for (int vec = 0; vec < 4; ++vec) {
                double best = -1.0;
                double best_th = ang[2 * vec], best_ph = ang[2 * vec + 1];
                for (int i = 0; i < grid_n; ++i) {
                    const double th = pi * i / (grid_n - 1);
                    for (int j = 0; j < 2 * grid_n; ++j) {
                        const double ph = pi * j / grid_n;
                        ang[2 * vec] = th;
                        ang[2 * vec + 1] = ph;
                        const double v = obj(ang);
                        if (v > best) {
                            best = v;
                            best_th = th;
                            best_ph = ph;
                        }
                    }
                }
                ang[2 * vec] = best_th;
                ang[2 * vec + 1] = best_ph;
            }
        }

        // refinement stage: golden-section line search per angle
        double window = pi / grid_n;
        for (int it = 0; it < refine_iters; ++it) {
            for (int k = 0; k < 8; ++k) {
                const double x0 = ang[k];
                auto line = [&](double x) {
                    std::array<double, 8> trial = ang;
                    trial[k] = x;
                    return obj(trial);
                };
                ang[k] = detail::golden_section_max(line, x0 - window, x0 + window, 40);
            }
            window = std::max(0.8 * window, 1e-6);
        }

        best_overall = std::max(best_overall, obj(ang));
    }
    return best_overall;
}

/// All quantifiers of a single state, bundled.
inline CorrelationReport correlation_report(const DensityMatrix& rho) {
    const FanoDecomposition f = fano_decompose(rho);
    CorrelationReport rep{};
    rep.negativity = negativity(rho);
    rep.discord1 = geometric_discord(rho, 1);
    rep.discord2 = geometric_discord(rho, 2);
    const BellResult b = bell_horodecki(rho);
    rep.locality_M = b.M;
    rep.bell_B = b.B;
    rep.chsh_value = b.chsh;
    const Matrix3 K1 = (Matrix3::outer(f.a1, f.a1) + f.T * f.T.transposed()).symmetrized();
    const Matrix3 K2 = (Matrix3::outer(f.a2, f.a2) + f.T.transposed() * f.T).symmetrized();
    rep.k_max1 = sym_eigenvalues3(K1)[2];
    rep.k_max2 = sym_eigenvalues3(K2)[2];
    return rep;
}

}  // namespace spinparity
