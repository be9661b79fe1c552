// scenario.hpp — Configuration parsing, figure presets, and the scenario runner

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qno/params.hpp"

namespace qno {

enum class ScenarioKind { spectrum, dynamics, fourier, rates_sweep, compare };
enum class Method { numeric, sea, lta, psa, nondissipative, all };

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;   // number of samples (>= 2 for a ranged grid)
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::dynamics;
    std::string unit_base = "omega";        // delta0 | omega (metadata)
    SystemParams params;
    Method method = Method::all;

    double t_max = 150.0;
    int t_steps = 3000;
    GridSpec omega_band{0.0, 2.0, 2001};    // Fourier band
    GridSpec sweep{0.8, 1.4, 601};          // oscillator-frequency sweep
    double window_t = 400.0;
    double window_eta = 0.005;              // artificial width for undamped spectra

    int j_max = 10;                          // doublets retained in the spectrum
    int levels = 0;                          // eigenstates kept in the dissipative run (0 = auto)
    int j_cut = -1;                          // oscillator levels in rho(0) (-1 = auto)
    int oracle_levels = 40;

    std::string preset;                      // set when built from a preset
    std::string name = "run";                // output file stem
    std::filesystem::path out_dir = ".";
};

// Parses the flat key = value format with [section] headers.  Unknown keys,
// malformed lines, and type errors are hard failures carrying line context.
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

// Named parameter sets reproducing the reference figures (fig1..fig6).
ScenarioConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

struct RunResult {
    std::vector<std::filesystem::path> data_files;
    std::filesystem::path manifest;
    std::vector<std::string> warnings;
};

// Executes the scenario and writes CSV data files plus a manifest.
// Deterministic: identical config yields byte-identical data files.
RunResult run_scenario(const ScenarioConfig& config);

// Worker count for sweep fan-out: SIMULATE_WORKERS env var, else
// hardware_concurrency.
int worker_count();

std::string scenario_kind_name(ScenarioKind k);
std::string method_name(Method m);

} // namespace qno
