#pragma once

// Gibbs states of the coupled Hamiltonian, built from the spectral sum
// rho = sum e^{-beta lambda_ns} rho_ns / Z rather than a generic matrix
// exponential. Exponents are shifted by the minimal level so the weights
// never overflow; once beta * gap exceeds the double-exponent range the
// ground-state projector is returned directly.

#include <cmath>

#include "spinparity/dirac.hpp"

namespace spinparity {

struct ThermalParams {
    double beta = 0.0;  ///< inverse temperature, 1/energy units

    explicit ThermalParams(double b) : beta(b) {
        if (!(beta >= 0.0) || !std::isfinite(beta))
            throw ConfigError("beta", "inverse temperature must be finite and nonnegative");
    }
};

inline DensityMatrix gibbs_state(const CouplingParams& cp, const ThermalParams& tp) {
    const SpectralData sd = spectral_data(cp);
    const double lam_min = sd.lambda_min();

    if (tp.beta * sd.ground_gap() > 745.0) {
        for (int n = 0; n < 2; ++n)
            for (int s = 0; s < 2; ++s)
                if (sd.lambda(n, s) == lam_min) return eigenstate_density(cp, n, s);
    }

    double z = 0.0;
    std::array<double, 4> w{};
    for (int n = 0; n < 2; ++n)
        for (int s = 0; s < 2; ++s) {
            w[2 * n + s] = std::exp(-tp.beta * (sd.lambda(n, s) - lam_min));
            z += w[2 * n + s];
        }

    Matrix4 r;
    for (int n = 0; n < 2; ++n)
        for (int s = 0; s < 2; ++s)
            r = r + Complex(w[2 * n + s] / z) * eigenstate_density(cp, n, s).matrix();
    return DensityMatrix::validate(r);
}

}  // namespace spinparity
