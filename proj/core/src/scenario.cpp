#include "qno/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "qno/approx.hpp"
#include "qno/brute_force.hpp"
#include "qno/observables.hpp"
#include "qno/oscillator.hpp"
#include "qno/redfield.hpp"
#include "qno/spectra.hpp"
#include "qno/vanvleck.hpp"

namespace qno {

namespace {

constexpr const char* kVersion = "qno 0.1.0";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& msg) {
    throw Error(errc::config_parse,
                origin + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& origin, int line, const std::string& key,
                 const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        parse_fail(origin, line, "key '" + key + "': not a number: '" + v + "'");
    }
    if (used != v.size())
        parse_fail(origin, line, "key '" + key + "': trailing junk in '" + v + "'");
    return out;
}

int to_int(const std::string& origin, int line, const std::string& key,
           const std::string& v) {
    const double d = to_double(origin, line, key, v);
    const int i = static_cast<int>(std::llround(d));
    if (std::abs(d - i) > 0.0)
        parse_fail(origin, line, "key '" + key + "': expected an integer, got '" + v + "'");
    return i;
}

Method parse_method(const std::string& origin, int line, std::string v) {
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "numeric") return Method::numeric;
    if (v == "sea") return Method::sea;
    if (v == "lta") return Method::lta;
    if (v == "psa") return Method::psa;
    if (v == "nondissipative") return Method::nondissipative;
    if (v == "all") return Method::all;
    parse_fail(origin, line, "unknown method '" + v + "'");
}

ScenarioKind parse_kind(const std::string& origin, int line, const std::string& v) {
    if (v == "spectrum") return ScenarioKind::spectrum;
    if (v == "dynamics") return ScenarioKind::dynamics;
    if (v == "fourier") return ScenarioKind::fourier;
    if (v == "rates-sweep") return ScenarioKind::rates_sweep;
    if (v == "compare") return ScenarioKind::compare;
    parse_fail(origin, line, "unknown scenario '" + v + "'");
}

} // namespace

std::string scenario_kind_name(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::spectrum: return "spectrum";
    case ScenarioKind::dynamics: return "dynamics";
    case ScenarioKind::fourier: return "fourier";
    case ScenarioKind::rates_sweep: return "rates-sweep";
    case ScenarioKind::compare: return "compare";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
    case Method::numeric: return "numeric";
    case Method::sea: return "SEA";
    case Method::lta: return "LTA";
    case Method::psa: return "PSA";
    case Method::nondissipative: return "nondissipative";
    case Method::all: return "all";
    }
    return "?";
}

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    cfg.name = "run";

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    bool have_scenario = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                parse_fail(origin, line_no, "malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known = {"params", "dynamics", "fourier",
                                                        "sweep", "truncation"};
            if (!known.count(section))
                parse_fail(origin, line_no, "unknown section '" + section + "'");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            parse_fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            parse_fail(origin, line_no, "empty key or value");

        auto num = [&] { return to_double(origin, line_no, key, val); };
        auto integer = [&] { return to_int(origin, line_no, key, val); };

        if (section.empty()) {
            if (key == "scenario") {
                cfg.kind = parse_kind(origin, line_no, val);
                have_scenario = true;
            } else if (key == "unit_base") {
                if (val != "delta0" && val != "omega")
                    parse_fail(origin, line_no, "unit_base must be delta0 or omega");
                cfg.unit_base = val;
            } else if (key == "method") {
                cfg.method = parse_method(origin, line_no, val);
            } else {
                parse_fail(origin, line_no, "unknown key '" + key + "'");
            }
        } else if (section == "params") {
            if (key == "epsilon") cfg.params.epsilon = num();
            else if (key == "delta0") cfg.params.delta0 = num();
            else if (key == "omega") cfg.params.omega = num();
            else if (key == "alpha") cfg.params.alpha = num();
            else if (key == "g") cfg.params.g = num();
            else if (key == "kappa") cfg.params.kappa = num();
            else if (key == "beta") cfg.params.beta = num();
            else parse_fail(origin, line_no, "unknown key 'params." + key + "'");
        } else if (section == "dynamics") {
            if (key == "t_max") cfg.t_max = num();
            else if (key == "steps") cfg.t_steps = integer();
            else parse_fail(origin, line_no, "unknown key 'dynamics." + key + "'");
        } else if (section == "fourier") {
            if (key == "omega_min") cfg.omega_band.lo = num();
            else if (key == "omega_max") cfg.omega_band.hi = num();
            else if (key == "steps") cfg.omega_band.steps = integer();
            else if (key == "window_t") cfg.window_t = num();
            else if (key == "eta") cfg.window_eta = num();
            else parse_fail(origin, line_no, "unknown key 'fourier." + key + "'");
        } else if (section == "sweep") {
            if (key == "omega_min") cfg.sweep.lo = num();
            else if (key == "omega_max") cfg.sweep.hi = num();
            else if (key == "steps") cfg.sweep.steps = integer();
            else parse_fail(origin, line_no, "unknown key 'sweep." + key + "'");
        } else if (section == "truncation") {
            if (key == "j_max") cfg.j_max = integer();
            else if (key == "levels") cfg.levels = integer();
            else if (key == "j_cut") cfg.j_cut = integer();
            else if (key == "oracle_levels") cfg.oracle_levels = integer();
            else parse_fail(origin, line_no, "unknown key 'truncation." + key + "'");
        }
    }
    if (!have_scenario)
        parse_fail(origin, line_no, "missing required key 'scenario'");

    if (cfg.t_steps < 1 || cfg.omega_band.steps < 2 || cfg.sweep.steps < 1)
        throw Error(errc::config_validation, origin + ": grids must be non-empty");
    if (cfg.t_max <= 0.0 || cfg.window_t <= 0.0)
        throw Error(errc::config_validation, origin + ": time spans must be positive");
    if (cfg.j_max < 4)
        throw Error(errc::config_validation, origin + ": truncation.j_max must be >= 4");
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(errc::io_failure, "cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    ScenarioConfig cfg = parse_config_text(text.str(), path.string());
    cfg.name = path.stem().string();
    return cfg;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig c;
    c.preset = name;
    c.name = name;
    c.params.delta0 = 1.0;
    c.params.omega = 1.0;

    if (name == "fig1") {
        // Coupled spectrum against the oscillator frequency; unbiased qubit.
        c.kind = ScenarioKind::spectrum;
        c.unit_base = "delta0";
        c.params.epsilon = 0.0;
        c.params.alpha = 0.02;
        c.params.g = 0.18;
        c.params.kappa = 0.0;
        c.params.beta = 10.0;
        c.sweep = {0.5, 1.5, 501};
    } else if (name == "fig2") {
        // Undamped dynamics and spectrum at the linear resonance.
        c.kind = ScenarioKind::fourier;
        c.method = Method::nondissipative;
        c.params.epsilon = 0.0;
        c.params.alpha = 0.02;
        c.params.g = 0.18;
        c.params.kappa = 0.0;
        c.params.beta = 10.0;
        c.t_max = 150.0;
        c.t_steps = 3000;
        c.omega_band = {0.4, 1.6, 2401};
        c.window_t = 400.0;
        c.window_eta = 0.005;
    } else if (name == "fig3") {
        // Relaxation rate against the oscillator frequency; biased qubit.
        c.kind = ScenarioKind::rates_sweep;
        c.unit_base = "delta0";
        c.params.epsilon = 0.5;
        c.params.alpha = 0.02;
        c.params.g = 0.18;
        c.params.kappa = 0.0154;
        c.params.beta = 10.0;
        c.sweep = {0.8, 1.4, 601};
    } else if (name == "fig4") {
        // Approximation schemes against the numerical solution.
        c.kind = ScenarioKind::compare;
        c.method = Method::all;
        c.params.epsilon = 0.0;
        c.params.alpha = 0.02;
        c.params.g = 0.18;
        c.params.kappa = 0.0154;
        c.params.beta = 10.0;
        c.t_max = 150.0;
        c.t_steps = 3000;
        c.omega_band = {0.4, 1.6, 2401};
        c.window_t = 400.0;
    } else if (name == "fig5" || name == "fig6") {
        // Elevated temperature; fig6 tunes the qubit to the 3->2 oscillator
        // transition.
        c.kind = ScenarioKind::fourier;
        c.method = Method::numeric;
        c.params.epsilon = 0.0;
        c.params.delta0 = name == "fig6" ? 1.18 : 1.0;
        c.params.alpha = 0.02;
        c.params.g = 0.18;
        c.params.kappa = 0.0154;
        c.params.beta = 3.0;
        c.t_max = 150.0;
        c.t_steps = 3000;
        c.omega_band = {0.2, 1.8, 3201};
        c.window_t = 400.0;
    } else {
        throw Error(errc::config_validation, "unknown preset '" + name + "'");
    }
    return c;
}

int worker_count() {
    if (const char* env = std::getenv("SIMULATE_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), std::max(1, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

struct Column {
    std::string name;
    std::vector<double> values;
};

void write_csv(const std::filesystem::path& path, const std::string& manifest_name,
               const std::vector<Column>& cols) {
    std::ofstream out(path);
    if (!out)
        throw Error(errc::io_failure, "cannot write " + path.string());
    out << "# manifest: " << manifest_name << "\n";
    for (std::size_t c = 0; c < cols.size(); ++c)
        out << (c ? "," : "") << cols[c].name;
    out << "\n";
    const std::size_t rows = cols.empty() ? 0 : cols[0].values.size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            out << (c ? "," : "") << fmt17(cols[c].values[r]);
        out << "\n";
    }
}

// Everything a dissipative or undamped dynamics run needs.
struct Workspace {
    SystemParams p;
    EnergySpectrum spec;
    Eigen::MatrixXd y;
    WeightTable weights;
    ComplexMatrix rho0;
    RateSet rates;
    RedfieldTensor tensor;
    int dim = 0;
    int j_cut = 0;
    double gamma_r = 0.0;
    double p_inf = 0.0;
};

int auto_levels(const ScenarioConfig& cfg, const SystemParams& p) {
    if (cfg.levels > 0)
        return std::min(cfg.levels, basis::state_count(cfg.j_max));
    return p.beta * p.omega >= 5.0 ? 9 : 13;
}

int auto_j_cut(const ScenarioConfig& cfg, const SystemParams& p) {
    if (cfg.j_cut >= 0)
        return cfg.j_cut;
    const int wanted = static_cast<int>(std::ceil(28.0 / (p.beta * p.omega)));
    return std::clamp(wanted, 1, cfg.j_max - 4);
}

Workspace make_workspace(const ScenarioConfig& cfg, std::vector<std::string>& warnings) {
    Workspace w;
    w.p = validate_params(cfg.params, &warnings);
    const double er2 = perturbation_error(cfg.j_max, 2, w.p);
    if (er2 > 0.05)
        warnings.push_back("second-order level error at j_max = " +
                           std::to_string(cfg.j_max) + " is " + fmt17(er2) +
                           "; spectra above that level are unreliable");

    w.spec = vanvleck_states(w.p, cfg.j_max);
    w.y = position_matrix(w.p, cfg.j_max);
    w.dim = auto_levels(cfg, w.p);
    w.j_cut = auto_j_cut(cfg, w.p);
    w.weights = weight_table(w.p, w.spec, w.dim);
    w.rho0 = initial_density(w.p, w.spec, w.dim, w.j_cut);
    w.rates = rate_set(w.p, w.spec, w.y);
    w.tensor = redfield_tensor(w.p, w.spec, w.y, w.dim);
    w.p_inf = p_infinity(w.p, w.spec, w.weights, w.dim);
    if (w.p.beta * w.p.omega >= 5.0)
        w.gamma_r = sea_rate(w.rates).gamma_r;
    else
        w.gamma_r = sea_rate_extended(w.tensor, w.dim).gamma_r;
    return w;
}

TimeSeries run_method(const Workspace& w, Method m, double dt, int n) {
    switch (m) {
    case Method::numeric: {
        auto traj = integrate_master(w.rho0, w.spec, w.tensor, dt, n);
        return population_difference(traj, w.weights);
    }
    case Method::sea:
        return sea_pt(w.spec, w.weights, w.rho0, w.rates, w.gamma_r, w.p_inf, dt, n);
    case Method::lta:
        return lta_pt(w.spec, w.weights, w.rho0, w.rates, dt, n);
    case Method::psa:
        return psa_pt(w.p, w.spec, w.weights, w.rho0, w.rates, dt, n);
    case Method::nondissipative:
        return nondissipative_pt(w.spec, w.weights, w.rho0, dt, n, w.dim);
    case Method::all:
        break;
    }
    throw Error(errc::config_validation, "method 'all' must be expanded by the caller");
}

std::vector<Method> expand_methods(Method m) {
    if (m == Method::all)
        return {Method::numeric, Method::sea, Method::lta, Method::psa};
    return {m};
}

struct ManifestWriter {
    std::ostringstream body;

    void kv(const std::string& key, const std::string& value) {
        body << key << " = " << value << "\n";
    }
    void kv(const std::string& key, double value) { kv(key, fmt17(value)); }
    void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
    void section(const std::string& name) { body << "\n[" << name << "]\n"; }
};

} // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    const std::string stem = cfg.name.empty() ? std::string("run") : cfg.name;
    const std::string manifest_name = stem + "_manifest.txt";

    RunResult result;
    ManifestWriter man;
    man.kv("version", kVersion);
    man.kv("scenario", scenario_kind_name(cfg.kind));
    if (!cfg.preset.empty())
        man.kv("preset", cfg.preset);
    man.kv("unit_base", cfg.unit_base);
    man.kv("method", method_name(cfg.method));

    std::vector<std::string> warnings;
    SystemParams p = validate_params(cfg.params, &warnings);

    man.section("params");
    man.kv("epsilon", p.epsilon);
    man.kv("delta0", p.delta0);
    man.kv("omega", p.omega);
    man.kv("alpha", p.alpha);
    man.kv("g", p.g);
    man.kv("kappa", p.kappa);
    man.kv("beta", p.beta);
    man.kv("delta_b", p.delta_b);
    man.kv("theta", p.theta);

    man.section("truncation");
    man.kv("j_max", cfg.j_max);

    auto add_file = [&](const std::filesystem::path& f) { result.data_files.push_back(f); };

    if (cfg.kind == ScenarioKind::spectrum) {
        const auto grid = linspace(cfg.sweep.lo, cfg.sweep.hi, cfg.sweep.steps);
        std::vector<std::array<double, 10>> rows(grid.size());
        std::vector<std::string> errors(grid.size());
        parallel_for(static_cast<int>(grid.size()), [&](int i) {
            try {
                SystemParams pi = cfg.params;
                pi.omega = grid[i];
                pi = validate_params(pi);
                EnergySpectrum s = eigenenergies(pi, 2);
                std::vector<double> unc;
                for (int j = 0; j <= 4; ++j) {
                    unc.push_back(-pi.delta_b / 2.0 + osc_energy(j, pi));
                    unc.push_back(+pi.delta_b / 2.0 + osc_energy(j, pi));
                }
                std::sort(unc.begin(), unc.end());
                for (int n = 0; n < 5; ++n) {
                    rows[i][n] = s.energies[n];
                    rows[i][5 + n] = unc[n];
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
        for (const auto& e : errors)
            if (!e.empty())
                throw Error(errc::config_validation, e);

        std::vector<Column> cols(11);
        cols[0].name = "omega";
        cols[0].values = grid;
        for (int n = 0; n < 5; ++n) {
            cols[1 + n].name = "E" + std::to_string(n);
            cols[6 + n].name = "E" + std::to_string(n) + "_uncoupled";
        }
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (int n = 0; n < 10; ++n)
                cols[1 + n].values.push_back(rows[i][n]);

        const auto csv = cfg.out_dir / (stem + "_spectrum.csv");
        write_csv(csv, manifest_name, cols);
        add_file(csv);

        man.section("sweep");
        man.kv("omega_min", cfg.sweep.lo);
        man.kv("omega_max", cfg.sweep.hi);
        man.kv("steps", cfg.sweep.steps);
    } else if (cfg.kind == ScenarioKind::rates_sweep) {
        const auto grid = linspace(cfg.sweep.lo, cfg.sweep.hi, cfg.sweep.steps);
        std::vector<double> gamma(grid.size()), second(grid.size());
        std::vector<std::string> errors(grid.size());
        parallel_for(static_cast<int>(grid.size()), [&](int i) {
            try {
                SystemParams pi = cfg.params;
                pi.omega = grid[i];
                pi = validate_params(pi);
                EnergySpectrum s = eigenenergies(pi, cfg.j_max);
                Eigen::MatrixXd y = position_matrix(pi, cfg.j_max);
                SeaRates r = sea_rate(rate_set(pi, s, y));
                gamma[i] = r.gamma_r;
                second[i] = r.second;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
        for (const auto& e : errors)
            if (!e.empty())
                throw Error(errc::config_validation, e);

        std::vector<Column> cols(3);
        cols[0] = {"omega", grid};
        cols[1] = {"gamma_r", gamma};
        cols[2] = {"second_eigenvalue", second};
        const auto csv = cfg.out_dir / (stem + "_rates.csv");
        write_csv(csv, manifest_name, cols);
        add_file(csv);

        man.section("sweep");
        man.kv("omega_min", cfg.sweep.lo);
        man.kv("omega_max", cfg.sweep.hi);
        man.kv("steps", cfg.sweep.steps);
    } else {
        // dynamics / fourier / compare share the workspace.
        Workspace w = make_workspace(cfg, warnings);
        man.section("truncation_resolved");
        man.kv("levels", w.dim);
        man.kv("j_cut", w.j_cut);
        man.kv("gamma_r", w.gamma_r);
        man.kv("p_infinity", w.p_inf);

        const double dt = cfg.t_max / cfg.t_steps;
        const int n_csv = cfg.t_steps + 1;
        const bool needs_fourier =
            cfg.kind == ScenarioKind::fourier || cfg.kind == ScenarioKind::compare;
        const int n_window = static_cast<int>(std::floor(cfg.window_t / dt)) + 1;
        const int n_total = needs_fourier ? std::max(n_csv, n_window) : n_csv;

        const auto methods = expand_methods(cfg.method);
        const bool single = methods.size() == 1;

        std::vector<TimeSeries> series;
        for (Method m : methods)
            series.push_back(run_method(w, m, dt, n_total));

        // Linear-oscillator comparison column for single-method runs.
        std::optional<TimeSeries> linear;
        if (single) {
            ScenarioConfig lin_cfg = cfg;
            lin_cfg.params.alpha = 0.0;
            std::vector<std::string> lin_warn;
            Workspace lw = make_workspace(lin_cfg, lin_warn);
            linear = run_method(lw, methods[0], dt, n_total);
        }

        std::vector<Column> cols;
        cols.push_back({"t", {}});
        for (int i = 0; i < n_csv; ++i)
            cols[0].values.push_back(dt * i);
        for (std::size_t s = 0; s < series.size(); ++s) {
            Column c;
            c.name = "P_" + method_name(methods[s]);
            c.values.assign(series[s].values.begin(), series[s].values.begin() + n_csv);
            cols.push_back(std::move(c));
        }
        if (linear) {
            Column c;
            c.name = "P_linear";
            c.values.assign(linear->values.begin(), linear->values.begin() + n_csv);
            cols.push_back(std::move(c));
        }
        const auto dyn_csv = cfg.out_dir / (stem + "_dynamics.csv");
        write_csv(dyn_csv, manifest_name, cols);
        add_file(dyn_csv);

        man.section("dynamics");
        man.kv("t_max", cfg.t_max);
        man.kv("steps", cfg.t_steps);
        man.kv("dt", dt);

        if (needs_fourier) {
            const auto om_grid =
                linspace(cfg.omega_band.lo, cfg.omega_band.hi, cfg.omega_band.steps);
            const double min_spacing = 2.0 * std::abs(coupling_delta(0, w.p));
            const double eta = w.p.kappa == 0.0 ? cfg.window_eta : 0.0;

            std::vector<Column> fcols;
            fcols.push_back({"omega", om_grid});
            double delta_weight = 0.0;
            for (std::size_t s = 0; s < series.size(); ++s) {
                SpectrumSeries f;
                if (methods[s] == Method::sea) {
                    f = sea_fourier(w.spec, w.weights, w.rho0, w.rates, w.gamma_r,
                                    w.p_inf, om_grid);
                    delta_weight = f.delta_weight;
                } else {
                    f = fourier_numeric(series[s], om_grid, cfg.window_t, eta,
                                        min_spacing);
                }
                fcols.push_back({"F_" + method_name(methods[s]), f.values});
            }
            if (linear) {
                auto f = fourier_numeric(*linear, om_grid, cfg.window_t, eta, 0.0);
                fcols.push_back({"F_linear", f.values});
            }
            const auto spec_csv = cfg.out_dir / (stem + "_spectrum.csv");
            write_csv(spec_csv, manifest_name, fcols);
            add_file(spec_csv);

            man.section("fourier");
            man.kv("omega_min", cfg.omega_band.lo);
            man.kv("omega_max", cfg.omega_band.hi);
            man.kv("steps", cfg.omega_band.steps);
            man.kv("window_t", cfg.window_t);
            man.kv("window_eta", eta);
            man.kv("delta_weight", delta_weight);
        }

        if (cfg.kind == ScenarioKind::compare) {
            // Sup-norm distance of each analytic scheme from the numeric run.
            man.section("compare");
            const TimeSeries* numeric = nullptr;
            for (std::size_t s = 0; s < series.size(); ++s)
                if (methods[s] == Method::numeric)
                    numeric = &series[s];
            if (numeric) {
                for (std::size_t s = 0; s < series.size(); ++s) {
                    if (methods[s] == Method::numeric)
                        continue;
                    double err = 0.0;
                    for (int i = 0; i < n_csv; ++i)
                        err = std::max(err, std::abs(series[s].values[i] -
                                                     numeric->values[i]));
                    man.kv("sup_error_" + method_name(methods[s]), err);
                }
            }
        }
    }

    man.section("warnings");
    for (std::size_t i = 0; i < warnings.size(); ++i)
        man.kv("warning_" + std::to_string(i), warnings[i]);

    man.section("files");
    for (std::size_t i = 0; i < result.data_files.size(); ++i)
        man.kv("file_" + std::to_string(i), result.data_files[i].filename().string());

    const auto manifest_path = cfg.out_dir / manifest_name;
    std::ofstream mo(manifest_path);
    if (!mo)
        throw Error(errc::io_failure, "cannot write " + manifest_path.string());
    mo << man.body.str();
    result.manifest = manifest_path;
    result.warnings = warnings;
    return result;
}

} // namespace qno
