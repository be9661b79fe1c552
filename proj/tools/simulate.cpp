// simulate — scenario runner for the qubit + nonlinear-oscillator simulator

#include <CLI11.hpp>
#include <iostream>

#include "qno/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Dissipative dynamics of a qubit coupled to a nonlinear oscillator"};
    app.footer("Presets: fig1..fig6 reproduce the reference parameter sets.");

    std::string scenario;
    std::string config_path;
    std::string preset;
    std::string out_dir = ".";

    app.add_option("scenario", scenario,
                   "spectrum | dynamics | fourier | rates-sweep | compare")
        ->required();
    auto* cfg_opt = app.add_option("--config", config_path, "configuration file");
    auto* preset_opt =
        app.add_option("--preset", preset, "named parameter set (fig1..fig6)");
    app.add_option("--out", out_dir, "output directory");
    cfg_opt->excludes(preset_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        qno::ScenarioConfig cfg;
        if (!preset.empty()) {
            cfg = qno::preset_config(preset);
        } else if (!config_path.empty()) {
            cfg = qno::load_config(config_path);
        } else {
            std::cerr << "simulate: either --config or --preset is required\n";
            return 1;
        }

        // The positional scenario selects what to compute; presets and config
        // files provide the parameters.
        const std::string kinds[] = {"spectrum", "dynamics", "fourier", "rates-sweep",
                                     "compare"};
        const qno::ScenarioKind kind_vals[] = {
            qno::ScenarioKind::spectrum, qno::ScenarioKind::dynamics,
            qno::ScenarioKind::fourier, qno::ScenarioKind::rates_sweep,
            qno::ScenarioKind::compare};
        bool known = false;
        for (int i = 0; i < 5; ++i)
            if (scenario == kinds[i]) {
                cfg.kind = kind_vals[i];
                known = true;
            }
        if (!known) {
            std::cerr << "simulate: unknown scenario '" << scenario << "'\n";
            return 1;
        }
        cfg.out_dir = out_dir;

        qno::RunResult result = qno::run_scenario(cfg);
        for (const auto& w : result.warnings)
            std::cerr << "warning: " << w << "\n";
        std::cout << "manifest: " << result.manifest.string() << "\n";
        for (const auto& f : result.data_files)
            std::cout << "data: " << f.string() << "\n";
        return 0;
    } catch (const qno::Error& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return qno::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return 3;
    }
}
