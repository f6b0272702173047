#include <catch2/catch_amalgamated.hpp>

#include "spinparity/quantifiers.hpp"
#include "spinparity/thermal.hpp"
#include "test_utils.hpp"

using namespace spinparity;
using Catch::Approx;

namespace {

double bisect(double lo, double hi, double tol, const std::function<bool(double)>& above) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("thermal parameter validation", "[thermal]") {
    REQUIRE_THROWS_AS(ThermalParams(-0.5), ConfigError);
    REQUIRE_THROWS_AS(ThermalParams(std::numeric_limits<double>::infinity()), ConfigError);
    REQUIRE_NOTHROW(ThermalParams(0.0));
}

TEST_CASE("gibbs state limits", "[thermal]") {
    const CouplingParams cp = CouplingParams::canonical(1.0);

    SECTION("infinite temperature gives the maximally mixed state") {
        const DensityMatrix rho = gibbs_state(cp, ThermalParams(0.0));
        REQUIRE(max_abs_diff(rho.matrix(), 0.25 * Matrix4::identity()) < 1e-12);
    }
    SECTION("low temperature converges to the ground state") {
        const SpectralData sd = spectral_data(cp);
        const double beta = 41.0 / sd.ground_gap();
        const DensityMatrix rho = gibbs_state(cp, ThermalParams(beta));
        const DensityMatrix ground = eigenstate_density(cp, 1, 0);
        const double fidelity = trace_product(rho.matrix(), ground.matrix()).real();
        REQUIRE(fidelity > 1.0 - 1e-12);
    }
    SECTION("beta far past the exponent range takes the projector branch") {
        const DensityMatrix rho = gibbs_state(cp, ThermalParams(1e6));
        const DensityMatrix ground = eigenstate_density(cp, 1, 0);
        REQUIRE(max_abs_diff(rho.matrix(), ground.matrix()) < 1e-12);
    }
}

TEST_CASE("gibbs state structure", "[thermal]") {
    sptest::Rng rng(71);

    SECTION("commutes with the Hamiltonian") {
        for (int trial = 0; trial < 20; ++trial) {
            const CouplingParams cp = sptest::random_coupling(rng);
            const Matrix4 h = hamiltonian_matrix(cp);
            const Matrix4 rho = gibbs_state(cp, ThermalParams(0.6)).matrix();
            REQUIRE(max_abs_diff(h * rho, rho * h) < 1e-9);
        }
    }
    SECTION("weights follow the Boltzmann distribution") {
        const CouplingParams cp = CouplingParams::canonical(0.8);
        const SpectralData sd = spectral_data(cp);
        const double beta = 0.9;
        const DensityMatrix rho = gibbs_state(cp, ThermalParams(beta));

        double z = 0.0;
        for (int n = 0; n < 2; ++n)
            for (int s = 0; s < 2; ++s)
                z += std::exp(-beta * (sd.lambda(n, s) - sd.lambda_min()));
        for (int n = 0; n < 2; ++n)
            for (int s = 0; s < 2; ++s) {
                const double expected =
                    std::exp(-beta * (sd.lambda(n, s) - sd.lambda_min())) / z;
                const double measured =
                    trace_product(rho.matrix(), eigenstate_density(cp, n, s).matrix()).real();
                REQUIRE(measured == Approx(expected).margin(1e-9));
            }
    }
    SECTION("purity is non-decreasing in beta") {
        const CouplingParams cp = CouplingParams::canonical(1.0);
        double prev = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double beta = 12.0 * i / 199.0;
            const double pur = gibbs_state(cp, ThermalParams(beta)).purity();
            REQUIRE(pur >= prev - 1e-12);
            prev = pur;
        }
    }
}

TEST_CASE("entanglement appears suddenly as the state cools", "[thermal]") {
    // regression thresholds located by bisection; recorded once and pinned
    const struct {
        double m_over_p;
        double beta_star;
    } cases[] = {{0.0, 0.422120333}, {1.0, 0.415269910}};

    for (const auto& c : cases) {
        const CouplingParams cp = CouplingParams::canonical(c.m_over_p);
        auto entangled = [&](double beta) {
            return negativity(gibbs_state(cp, ThermalParams(beta))) > 1e-12;
        };
        auto nonlocal = [&](double beta) {
            return bell_horodecki(gibbs_state(cp, ThermalParams(beta))).B > 0.0;
        };
        REQUIRE_FALSE(entangled(1e-3));
        REQUIRE(entangled(10.0));

        const double beta_star = bisect(1e-3, 10.0, 1e-6, entangled);
        REQUIRE(beta_star == Approx(c.beta_star).margin(1e-5));

        // the state turns local strictly before it turns separable as T grows
        const double beta_bell = bisect(1e-3, 20.0, 1e-6, nonlocal);
        REQUIRE(beta_bell > beta_star + 1e-3);
    }
}

TEST_CASE("low-temperature plateau matches the ground-state report", "[thermal]") {
    for (double mp : {0.0, 1.0}) {
        const CouplingParams cp = CouplingParams::canonical(mp);
        const CorrelationReport cold =
            correlation_report(gibbs_state(cp, ThermalParams(60.0)));
        const CorrelationReport ground = correlation_report(eigenstate_density(cp, 1, 0));
        REQUIRE(cold.negativity == Approx(ground.negativity).margin(1e-9));
        REQUIRE(cold.discord1 == Approx(ground.discord1).margin(1e-9));
        REQUIRE(cold.bell_B == Approx(ground.bell_B).margin(1e-9));
    }
    // massless ground state is maximally entangled
    const CorrelationReport rep = correlation_report(
        gibbs_state(CouplingParams::canonical(0.0), ThermalParams(60.0)));
    REQUIRE(rep.negativity == Approx(1.0).margin(1e-9));
    REQUIRE(rep.bell_B == Approx(1.0).margin(1e-9));
}
