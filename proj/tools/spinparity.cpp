// Command-line front end: runs a named figure preset or a custom sweep,
// emits CSV (and optionally SVG) files, and checks or blesses regression
// snapshots. Exit codes: 0 clean, 1 configuration error, 2 partial results
// (some sweep rows errored).

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinparity/spinparity.hpp"

namespace {

spinparity::Scenario parse_scenario(const std::string& s) {
    using spinparity::Scenario;
    if (s == "free") return Scenario::free;
    if (s == "mixture") return Scenario::mixture;
    if (s == "thermal") return Scenario::thermal;
    if (s == "cp_diff") return Scenario::cp_diff;
    if (s == "cp_diff_thermal") return Scenario::cp_diff_thermal;
    throw spinparity::ConfigError("scenario", "unknown scenario '" + s + "'");
}

spinparity::SweepVariable parse_variable(const std::string& s) {
    using spinparity::SweepVariable;
    if (s == "m_over_E") return SweepVariable::m_over_E;
    if (s == "m_over_p") return SweepVariable::m_over_p;
    if (s == "A") return SweepVariable::A;
    if (s == "beta_p") return SweepVariable::beta_p;
    throw spinparity::ConfigError("var", "unknown sweep variable '" + s + "'");
}

struct Emitted {
    bool partial = false;
};

Emitted emit_run(const spinparity::PresetRun& run, const std::string& out_dir,
                 const std::string& svg_dir) {
    const spinparity::SweepTable table = spinparity::run_sweep(run.config);
    const std::string csv = spinparity::to_csv(table);
    const std::string csv_path = run.config.output_path.empty()
                                     ? out_dir + "/" + run.tag + ".csv"
                                     : run.config.output_path;
    spinparity::write_file(csv_path, csv);
    std::cout << "wrote " << csv_path << "\n";
    if (!svg_dir.empty()) {
        const std::string svg_path = svg_dir + "/" + run.tag + ".svg";
        spinparity::ChartStyle style;
        style.title = run.tag;
        spinparity::write_file(svg_path, spinparity::emit_svg(table, style));
        std::cout << "wrote " << svg_path << "\n";
    }
    return {table.partial()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-parity correlation sweeps for Dirac bi-spinor states"};
    app.get_formatter()->column_width(34);

    std::string command;
    app.add_option("command", command,
                   "preset name (fig1, fig2a-f, fig3a-c, fig4, fig5), 'sweep', or 'list'")
        ->required();

    std::string scenario = "free";
    std::string var = "m_over_E";
    double from = 0.0, to = 1.0;
    int points = 101;
    std::vector<std::string> sets;
    std::vector<double> weights;
    std::string out_dir = ".";
    std::string svg_dir;
    std::string snapshot_dir;
    bool bless = false;
    bool electric = false;

    app.add_option("--scenario", scenario, "free|mixture|thermal|cp_diff|cp_diff_thermal");
    app.add_option("--var", var, "sweep variable: m_over_E|m_over_p|A|beta_p");
    app.add_option("--from", from, "sweep range start");
    app.add_option("--to", to, "sweep range stop");
    app.add_option("--points", points, "number of sweep points");
    app.add_option("--set", sets, "fixed parameter key=value (repeatable)");
    app.add_option("--weights", weights, "mixture weights a00,a01,a10,a11")->delimiter(',');
    app.add_option("--out", out_dir, "output directory, or a .csv path for a single sweep");
    app.add_option("--svg", svg_dir, "also emit SVG charts into this directory");
    app.add_option("--snapshot-dir", snapshot_dir, "compare output against snapshots here");
    app.add_flag("--bless", bless, "write snapshots instead of comparing");
    app.add_flag("--electric", electric, "use the electric-field substitution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (command == "list") {
            for (const std::string& n : spinparity::preset_names()) std::cout << n << "\n";
            return 0;
        }

        std::vector<spinparity::PresetRun> runs;
        if (command == "sweep") {
            spinparity::SweepConfig cfg;
            cfg.scenario = parse_scenario(scenario);
            cfg.variable = parse_variable(var);
            cfg.start = from;
            cfg.stop = to;
            cfg.points = points;
            if (electric) cfg.field_kind = spinparity::FieldKind::electric;
            for (const std::string& kv : sets) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw spinparity::ConfigError("set", "expected key=value, got '" + kv + "'");
                cfg.set_fixed(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
            }
            if (!weights.empty()) {
                if (weights.size() != 4)
                    throw spinparity::ConfigError("weights", "need exactly four weights");
                cfg.weights = spinparity::MixtureWeights(weights[0], weights[1], weights[2],
                                                         weights[3]);
            }
            if (out_dir.size() > 4 && out_dir.ends_with(".csv")) {
                cfg.output_path = out_dir;
                out_dir = std::filesystem::path(out_dir).parent_path().string();
                if (out_dir.empty()) out_dir = ".";
            }
            cfg.validate();
            runs.push_back({"sweep", cfg});
        } else {
            runs = spinparity::preset_runs(command);
        }

        std::filesystem::create_directories(out_dir);
        if (!svg_dir.empty()) std::filesystem::create_directories(svg_dir);

        if (!snapshot_dir.empty()) {
            std::filesystem::create_directories(snapshot_dir);
            const spinparity::SnapshotReport rep =
                spinparity::regression_snapshot(runs, snapshot_dir, bless);
            if (bless) {
                std::cout << "blessed " << runs.size() << " snapshot(s) in " << snapshot_dir
                          << "\n";
            } else if (rep.passed) {
                std::cout << "snapshots match\n";
            } else {
                std::cerr << "snapshot mismatch: " << rep.detail << "\n";
                return 1;
            }
        }

        bool partial = false;
        for (const spinparity::PresetRun& run : runs) partial |= emit_run(run, out_dir, svg_dir).partial;
        return partial ? 2 : 0;
    } catch (const spinparity::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const spinparity::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
