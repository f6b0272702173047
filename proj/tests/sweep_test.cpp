#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "spinparity/svg.hpp"
#include "spinparity/sweep.hpp"

using namespace spinparity;
using Catch::Approx;

namespace {

SweepConfig free_config(int points = 41) {
    SweepConfig c;
    c.scenario = Scenario::free;
    c.variable = SweepVariable::m_over_E;
    c.start = 0.0;
    c.stop = 1.0;
    c.points = points;
    c.A = 0.5;
    return c;
}

std::filesystem::path temp_dir(const char* tag) {
    const auto dir = std::filesystem::temp_directory_path() / tag;
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("config validation", "[sweep]") {
    SweepConfig c = free_config();
    SECTION("reversed range") {
        c.start = 1.0;
        c.stop = 0.0;
        REQUIRE_THROWS_AS(run_sweep(c), ConfigError);
    }
    SECTION("too few points") {
        c.points = 1;
        REQUIRE_THROWS_AS(run_sweep(c), ConfigError);
    }
    SECTION("unsupported scenario/variable pair") {
        c.scenario = Scenario::mixture;
        c.variable = SweepVariable::beta_p;
        REQUIRE_THROWS_AS(run_sweep(c), ConfigError);
    }
    SECTION("unknown fixed key") {
        REQUIRE_THROWS_AS(c.set_fixed("masses", 1.0), ConfigError);
    }
}

TEST_CASE("free sweep columns and shape", "[sweep]") {
    const SweepTable table = run_sweep(free_config(101));
    REQUIRE(table.columns.size() == 7);
    REQUIRE(table.columns[0] == "m_over_E");
    REQUIRE(table.rows.size() == 101);
    REQUIRE_FALSE(table.partial());

    // discord peaks at m/E = 1/sqrt(2); Bell column never positive;
    // the mixture stays separable everywhere
    double best_x = 0.0, best_v = -1.0;
    for (const SweepRow& r : table.rows) {
        REQUIRE(r.values[4] <= 1e-12);   // bell_B
        REQUIRE(r.values[0] <= 1e-12);   // negativity
        if (r.values[1] > best_v) {
            best_v = r.values[1];
            best_x = r.x;
        }
    }
    REQUIRE(best_x == Approx(1.0 / std::sqrt(2.0)).margin(0.01));
    // the 101-point grid straddles the cusp, so the sampled peak sits just
    // below the true 1/8 maximum
    REQUIRE(best_v == Approx(0.125).margin(2e-3));
}

TEST_CASE("thermal sweep shows the entanglement threshold", "[sweep]") {
    SweepConfig c;
    c.scenario = Scenario::thermal;
    c.variable = SweepVariable::beta_p;
    c.start = 0.0;
    c.stop = 5.0;
    c.points = 51;
    c.m_over_p = 0.0;
    const SweepTable table = run_sweep(c);
    REQUIRE(table.rows.front().values[0] == Approx(0.0).margin(1e-12));
    REQUIRE(table.rows.back().values[0] > 0.5);
}

TEST_CASE("determinism across runs and thread counts", "[sweep]") {
    const SweepConfig c = free_config(64);
    const std::string once = to_csv(run_sweep(c));
    const std::string twice = to_csv(run_sweep(c));
    REQUIRE(once == twice);

    setenv("SPINPARITY_THREADS", "1", 1);
    const std::string serial = to_csv(run_sweep(c));
    setenv("SPINPARITY_THREADS", "7", 1);
    const std::string parallel = to_csv(run_sweep(c));
    unsetenv("SPINPARITY_THREADS");
    REQUIRE(serial == once);
    REQUIRE(parallel == once);
}

TEST_CASE("CSV format", "[sweep]") {
    const SweepTable table = run_sweep(free_config(3));
    const std::string csv = to_csv(table);
    REQUIRE(csv.rfind("m_over_E,negativity,discord1,discord2,locality_M,bell_B,chsh\n", 0) ==
            0);
    REQUIRE(csv.find('\r') == std::string::npos);
    // 17 significant digits survive a parse round trip
    const double cusp = 1.0 / std::sqrt(2.0);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", cusp);
    REQUIRE(std::strtod(buf, nullptr) == cusp);
}

TEST_CASE("error rows mark the cell and the sweep continues", "[sweep]") {
    SweepConfig c;
    c.scenario = Scenario::mixture;
    c.variable = SweepVariable::m_over_p;
    c.start = 0.0;
    c.stop = 2.0;
    c.points = 5;
    c.B_over_p = 0.0;  // kills the field, degenerating every sweep point
    c.weights = MixtureWeights(0.5, 0.5, 0.0, 0.0);
    const SweepTable table = run_sweep(c);
    REQUIRE(table.rows.size() == 5);
    REQUIRE(table.partial());
    for (const SweepRow& r : table.rows) REQUIRE(r.error == "DegenerateSpectrum");
    const std::string csv = to_csv(table);
    REQUIRE(csv.find("error:DegenerateSpectrum") != std::string::npos);
}

TEST_CASE("figure presets", "[sweep]") {
    REQUIRE(preset_names().size() == 12);
    REQUIRE(preset_runs("fig1").size() == 1);
    REQUIRE(preset_runs("fig2c")[0].config.weights(0, 0) == Approx(0.5));
    REQUIRE(preset_runs("fig2f")[0].config.weights(1, 1) == Approx(0.5));
    REQUIRE(preset_runs("fig3b")[0].config.m_over_p == Approx(1.0));
    REQUIRE(preset_runs("fig4").size() == 6);
    REQUIRE(preset_runs("fig5").size() == 3);
    REQUIRE_THROWS_AS(preset_runs("fig9"), ConfigError);
}

TEST_CASE("svg emission", "[sweep][svg]") {
    SECTION("two-row table renders a straight line") {
        const SweepTable table = run_sweep(free_config(2));
        const std::string svg = emit_svg(table);
        REQUIRE(svg.rfind("<svg", 0) == 0);
        REQUIRE(svg.find("<polyline") != std::string::npos);
        REQUIRE(svg.find("stroke-dasharray=\"8,4\"") != std::string::npos);  // discord dashed
        REQUIRE(svg.find("stroke-dasharray=\"2,3\"") != std::string::npos);  // Bell dotted
    }
    SECTION("too few rows") {
        SweepTable empty;
        empty.columns = {"x", "negativity"};
        REQUIRE_THROWS_AS(emit_svg(empty), EmptyTable);
    }
    SECTION("cp_diff default curve is the discord difference") {
        SweepConfig c;
        c.scenario = Scenario::cp_diff;
        c.variable = SweepVariable::m_over_p;
        c.start = 0.2;
        c.stop = 1.0;
        c.points = 5;
        c.weights = MixtureWeights(0.5, 0.5, 0.0, 0.0);
        const std::string svg = emit_svg(run_sweep(c));
        REQUIRE(svg.find("|D_cp - D|") != std::string::npos);
    }
}

TEST_CASE("snapshot regression", "[sweep]") {
    const auto dir = temp_dir("spinparity_snap_test");
    const std::vector<PresetRun> runs = {{"unit_snap", free_config(9)}};

    SECTION("missing snapshot") {
        std::filesystem::remove(dir / "unit_snap.csv");
        const SnapshotReport rep = regression_snapshot(runs, dir.string(), false);
        REQUIRE_FALSE(rep.passed);
        REQUIRE(rep.detail.find("missing") != std::string::npos);
    }
    SECTION("bless then pass, perturb then locate") {
        REQUIRE(regression_snapshot(runs, dir.string(), true).passed);
        REQUIRE(regression_snapshot(runs, dir.string(), false).passed);

        // perturb one cell beyond the tolerance
        std::string text = read_file((dir / "unit_snap.csv").string());
        const auto pos = text.find('\n') + 1;
        const auto comma = text.find(',', pos);
        text.replace(pos, comma - pos, "0.5");
        write_file((dir / "unit_snap.csv").string(), text);

        const SnapshotReport rep = regression_snapshot(runs, dir.string(), false);
        REQUIRE_FALSE(rep.passed);
        REQUIRE(rep.detail.find("row 1") != std::string::npos);
        REQUIRE(rep.detail.find("column 0") != std::string::npos);
    }
}
