#pragma once

// Parameter-sweep front end: scenario evaluation, deterministic CSV emission
// (17 significant digits, '.' decimal separator, UNIX newlines), named figure
// presets and snapshot regression checks. Sweep points are evaluated in
// parallel and assembled in index order, so the output bytes are independent
// of the thread count.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spinparity/symmetry.hpp"

namespace spinparity {

enum class Scenario { free, mixture, thermal, cp_diff, cp_diff_thermal };
enum class SweepVariable { m_over_E, m_over_p, A, beta_p };

inline const char* variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::m_over_E: return "m_over_E";
        case SweepVariable::m_over_p: return "m_over_p";
        case SweepVariable::A: return "A";
        default: return "beta_p";
    }
}

inline const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::free: return "free";
        case Scenario::mixture: return "mixture";
        case Scenario::thermal: return "thermal";
        case Scenario::cp_diff: return "cp_diff";
        default: return "cp_diff_thermal";
    }
}

struct SweepConfig {
    Scenario scenario = Scenario::free;
    SweepVariable variable = SweepVariable::m_over_E;
    double start = 0.0;
    double stop = 1.0;
    int points = 101;

    // fixed parameters (defaults follow the coupled-model reference setup:
    // B/p = kappa = chi = 1, theta = pi/4)
    double A = 0.5;
    double m_over_E = 0.5;
    double m_over_p = 1.0;
    double B_over_p = 1.0;
    double kappa = 1.0;
    double chi = 1.0;
    double theta = std::numbers::pi / 4;
    double beta_p = 1.0;
    FieldKind field_kind = FieldKind::magnetic;
    MixtureWeights weights{};
    int discord_side = 1;
    std::string output_path;

    bool has_cp_column() const {
        return scenario == Scenario::cp_diff || scenario == Scenario::cp_diff_thermal;
    }

    void validate() const {
        if (!(start < stop)) throw ConfigError("range", "start must be smaller than stop");
        if (points < 2) throw ConfigError("points", "need at least two sweep points");
        for (double v : {A, m_over_E, m_over_p, B_over_p, kappa, chi, theta, beta_p})
            if (!std::isfinite(v)) throw ConfigError("fixed", "fixed values must be finite");
        if (discord_side != 1 && discord_side != 2)
            throw ConfigError("discord_side", "must be 1 or 2");
        const bool ok =
            (scenario == Scenario::free &&
             (variable == SweepVariable::m_over_E || variable == SweepVariable::A)) ||
            (scenario == Scenario::mixture && variable == SweepVariable::m_over_p) ||
            (scenario == Scenario::thermal &&
             (variable == SweepVariable::beta_p || variable == SweepVariable::m_over_p)) ||
            (scenario == Scenario::cp_diff && variable == SweepVariable::m_over_p) ||
            (scenario == Scenario::cp_diff_thermal && variable == SweepVariable::beta_p);
        if (!ok)
            throw ConfigError("var", std::string("sweep variable ") + variable_name(variable) +
                                         " is not supported for scenario " +
                                         scenario_name(scenario));
    }

    /// Assign a fixed parameter by name (the CLI's --set key=value).
    void set_fixed(const std::string& key, double value) {
        if (key == "A") A = value;
        else if (key == "m_over_E") m_over_E = value;
        else if (key == "m_over_p") m_over_p = value;
        else if (key == "B_over_p") B_over_p = value;
        else if (key == "kappa") kappa = value;
        else if (key == "chi") chi = value;
        else if (key == "theta") theta = value;
        else if (key == "beta_p") beta_p = value;
        else if (key == "discord_side") discord_side = static_cast<int>(value);
        else if (key == "electric") field_kind = value != 0.0 ? FieldKind::electric
                                                              : FieldKind::magnetic;
        else throw ConfigError(key, "unknown fixed parameter");
    }
};

struct SweepRow {
    double x = 0.0;
    std::vector<double> values;  ///< empty when the row errored
    std::string error;           ///< error name, empty on success
};

struct SweepTable {
    std::vector<std::string> columns;  ///< including the sweep variable
    std::vector<SweepRow> rows;

    bool partial() const {
        for (const SweepRow& r : rows)
            if (!r.error.empty()) return true;
        return false;
    }
};

namespace detail {

inline std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline CouplingParams coupled_params(const SweepConfig& cfg, double m_over_p) {
    CouplingParams cp = CouplingParams::canonical(m_over_p, cfg.B_over_p, cfg.kappa, cfg.chi,
                                                  cfg.theta);
    if (cfg.field_kind == FieldKind::electric) cp = electric_substitution(cp);
    return cp;
}

inline SweepRow evaluate_point(const SweepConfig& cfg, double x) {
    SweepRow row;
    row.x = x;
    try {
        DensityMatrix rho = maximally_mixed();
        double cp_diff = 0.0;
        switch (cfg.scenario) {
            case Scenario::free: {
                const double A = cfg.variable == SweepVariable::A ? x : cfg.A;
                const double ratio =
                    cfg.variable == SweepVariable::m_over_E ? x : cfg.m_over_E;
                rho = rho_free(FreeParams::from_ratio(A, ratio));
                break;
            }
            case Scenario::mixture: {
                rho = mixture_state(coupled_params(cfg, x), cfg.weights);
                break;
            }
            case Scenario::thermal: {
                const double mp =
                    cfg.variable == SweepVariable::m_over_p ? x : cfg.m_over_p;
                const double beta =
                    cfg.variable == SweepVariable::beta_p ? x : cfg.beta_p;
                rho = gibbs_state(coupled_params(cfg, mp), ThermalParams(beta));
                break;
            }
            case Scenario::cp_diff: {
                const CouplingParams cp = coupled_params(cfg, x);
                rho = mixture_state(cp, cfg.weights);
                cp_diff = cp_discord_difference(cp, cfg.weights, cfg.discord_side);
                break;
            }
            case Scenario::cp_diff_thermal: {
                const CouplingParams cp = coupled_params(cfg, cfg.m_over_p);
                rho = gibbs_state(cp, ThermalParams(x));
                cp_diff = cp_discord_difference_thermal(cp, ThermalParams(x),
                                                        cfg.discord_side);
                break;
            }
        }
        const CorrelationReport rep = correlation_report(rho);
        row.values = {rep.negativity, rep.discord1, rep.discord2,
                      rep.locality_M, rep.bell_B,   rep.chsh_value};
        if (cfg.has_cp_column()) row.values.push_back(cp_diff);
    } catch (const Error& e) {
        row.error = e.kind();
    }
    return row;
}

inline unsigned sweep_thread_count() {
    if (const char* env = std::getenv("SPINPARITY_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace detail

/// One row per sweep point; domain errors mark the row and the sweep
/// continues. Output is deterministic for identical configs.
inline SweepTable run_sweep(const SweepConfig& cfg) {
    cfg.validate();

    SweepTable table;
    table.columns = {variable_name(cfg.variable), "negativity", "discord1", "discord2",
                     "locality_M", "bell_B", "chsh"};
    if (cfg.has_cp_column()) table.columns.push_back("cp_discord_diff");

    table.rows.resize(cfg.points);
    const double step = (cfg.stop - cfg.start) / (cfg.points - 1);
    auto x_of = [&](int i) {
        return i + 1 == cfg.points ? cfg.stop : cfg.start + step * i;
    };

    const unsigned nthreads = std::min<unsigned>(detail::sweep_thread_count(),
                                                 static_cast<unsigned>(cfg.points));
    if (nthreads <= 1) {
        for (int i = 0; i < cfg.points; ++i) table.rows[i] = detail::evaluate_point(cfg, x_of(i));
    } else {
        std::atomic<int> next{0};
        std::atomic<bool> poisoned{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= cfg.points || poisoned.load(std::memory_order_relaxed)) return;
                try {
                    table.rows[i] = detail::evaluate_point(cfg, x_of(i));
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    poisoned.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return table;
}

/// Comma-separated, header row, 17 significant digits, UNIX newlines.
inline std::string to_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const SweepRow& row : table.rows) {
        out += detail::format_cell(row.x);
        if (row.error.empty()) {
            for (double v : row.values) {
                out += ',';
                out += detail::format_cell(v);
            }
        } else {
            for (std::size_t c = 1; c < table.columns.size(); ++c) {
                out += ",error:";
                out += row.error;
            }
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// figure presets
// ---------------------------------------------------------------------------

struct PresetRun {
    std::string tag;  ///< file stem for emission and snapshots
    SweepConfig config;
};

inline std::vector<std::string> preset_names() {
    return {"fig1", "fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f",
            "fig3a", "fig3b", "fig3c", "fig4", "fig5"};
}

/// Sweep configurations behind each named figure preset. Multi-curve figures
/// (fig4, fig5) expand to one run per curve.
inline std::vector<PresetRun> preset_runs(const std::string& name) {
    auto mixture_cfg = [](const MixtureWeights& w) {
        SweepConfig c;
        c.scenario = Scenario::mixture;
        c.variable = SweepVariable::m_over_p;
        c.start = 0.0;
        c.stop = 5.0;
        c.points = 201;
        c.weights = w;
        return c;
    };
    auto thermal_cfg = [](double m_over_p) {
        SweepConfig c;
        c.scenario = Scenario::thermal;
        c.variable = SweepVariable::beta_p;
        c.start = 0.0;
        c.stop = 10.0;
        c.points = 201;
        c.m_over_p = m_over_p;
        return c;
    };
    auto cp_cfg = [&](const MixtureWeights& w) {
        SweepConfig c = mixture_cfg(w);
        c.scenario = Scenario::cp_diff;
        return c;
    };
    auto cp_thermal_cfg = [&](double m_over_p) {
        SweepConfig c = thermal_cfg(m_over_p);
        c.scenario = Scenario::cp_diff_thermal;
        return c;
    };

    if (name == "fig1") {
        SweepConfig c;
        c.scenario = Scenario::free;
        c.variable = SweepVariable::m_over_E;
        c.start = 0.0;
        c.stop = 1.0;
        c.points = 101;
        c.A = 0.5;
        return {{"fig1", c}};
    }
    if (name == "fig2a") return {{"fig2a", mixture_cfg({0.1, 0.9, 0.0, 0.0})}};
    if (name == "fig2b") return {{"fig2b", mixture_cfg({0.3, 0.7, 0.0, 0.0})}};
    if (name == "fig2c") return {{"fig2c", mixture_cfg({0.5, 0.5, 0.0, 0.0})}};
    if (name == "fig2d") return {{"fig2d", mixture_cfg({0.1, 0.0, 0.0, 0.9})}};
    if (name == "fig2e") return {{"fig2e", mixture_cfg({0.3, 0.0, 0.0, 0.7})}};
    if (name == "fig2f") return {{"fig2f", mixture_cfg({0.5, 0.0, 0.0, 0.5})}};
    if (name == "fig3a") return {{"fig3a", thermal_cfg(0.0)}};
    if (name == "fig3b") return {{"fig3b", thermal_cfg(1.0)}};
    if (name == "fig3c") return {{"fig3c", thermal_cfg(10.0)}};
    if (name == "fig4")
        return {{"fig4_pos_a01", cp_cfg({0.1, 0.9, 0.0, 0.0})},
                {"fig4_pos_a03", cp_cfg({0.3, 0.7, 0.0, 0.0})},
                {"fig4_pos_a05", cp_cfg({0.5, 0.5, 0.0, 0.0})},
                {"fig4_posneg_a01", cp_cfg({0.1, 0.0, 0.0, 0.9})},
                {"fig4_posneg_a03", cp_cfg({0.3, 0.0, 0.0, 0.7})},
                {"fig4_posneg_a05", cp_cfg({0.5, 0.0, 0.0, 0.5})}};
    if (name == "fig5")
        return {{"fig5_m1", cp_thermal_cfg(1.0)},
                {"fig5_m5", cp_thermal_cfg(5.0)},
                {"fig5_m10", cp_thermal_cfg(10.0)}};
    throw ConfigError("preset", "unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// snapshot regression
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

inline bool cells_match(const std::string& a, const std::string& b, double tol) {
    if (a == b) return true;
    char* enda = nullptr;
    char* endb = nullptr;
    const double va = std::strtod(a.c_str(), &enda);
    const double vb = std::strtod(b.c_str(), &endb);
    const bool numa = enda && *enda == '\0' && !a.empty();
    const bool numb = endb && *endb == '\0' && !b.empty();
    if (!numa || !numb) return false;
    return std::abs(va - vb) <= tol;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SnapshotMissing(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

/// Cell-wise comparison against a stored snapshot, 1e-9 numeric tolerance;
/// throws SnapshotMismatch locating the first divergence.
inline void check_snapshot(const std::string& path, const std::string& csv,
                           double tol = 1e-9) {
    const std::string stored = read_file(path);
    const auto got = detail::parse_csv(csv);
    const auto want = detail::parse_csv(stored);
    if (got.size() != want.size())
        throw SnapshotMismatch(path, std::min(got.size(), want.size()), 0,
                               "row count differs (" + std::to_string(got.size()) + " vs " +
                                   std::to_string(want.size()) + ")");
    for (std::size_t r = 0; r < got.size(); ++r) {
        if (got[r].size() != want[r].size())
            throw SnapshotMismatch(path, r, std::min(got[r].size(), want[r].size()),
                                   "column count differs");
        for (std::size_t c = 0; c < got[r].size(); ++c)
            if (!detail::cells_match(got[r][c], want[r][c], tol))
                throw SnapshotMismatch(path, r, c,
                                       "'" + got[r][c] + "' vs '" + want[r][c] + "'");
    }
}

struct SnapshotReport {
    bool passed = true;
    std::string detail;  ///< first divergence, empty when passed
};

/// Runs every config, then either blesses (writes) or checks the snapshots
/// under `dir` named `<tag>.csv`. Reports the first divergence.
inline SnapshotReport regression_snapshot(const std::vector<PresetRun>& runs,
                                          const std::string& dir, bool bless) {
    for (const PresetRun& run : runs) {
        const std::string path = dir + "/" + run.tag + ".csv";
        const std::string csv = to_csv(run_sweep(run.config));
        if (bless) {
            write_file(path, csv);
            continue;
        }
        try {
            check_snapshot(path, csv);
        } catch (const Error& e) {
            return {false, e.what()};
        }
    }
    return {true, ""};
}

}  // namespace spinparity
