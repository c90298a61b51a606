#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaw/config.hpp"
#include "qaw/pump_model.hpp"
#include "qaw/runner.hpp"
#include "qaw/verify.hpp"

namespace {

// dotted-key overrides: --set solver.tol=1e-8 --set g=2
qaw::ExperimentConfig apply_overrides(const qaw::ExperimentConfig& cfg,
                                      const std::vector<std::string>& overrides) {
    if (overrides.empty()) return cfg;
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(cfg.to_json());
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw qaw::ConfigError("override '" + item + "' is not of the form key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        // parse the value as JSON when possible, else keep it as a string
        try {
            j[key] = nlohmann::ordered_json::parse(value);
        } catch (const nlohmann::json::exception&) {
            j[key] = value;
        }
    }
    return qaw::load_config_text(j.dump());
}

int run_command(const std::string& config_path, const std::string& preset,
                const std::string& out_dir, const std::vector<std::string>& overrides) {
    qaw::ExperimentConfig cfg;
    if (!preset.empty())
        cfg = qaw::preset_config(preset);
    else if (!config_path.empty())
        cfg = qaw::load_config_file(config_path);
    else
        throw qaw::ConfigError("run: give --config PATH or --preset NAME");
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    cfg = apply_overrides(cfg, overrides);

    const qaw::RunResult result = qaw::run_experiment(cfg);
    std::cout << "wrote " << result.files_written.size() << " files to " << cfg.output_dir << " in "
              << result.wall_seconds << " s\n";
    for (const auto& w : result.warnings) std::cout << "warning: " << w << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-Hermitian discrete-time quantum walk simulator"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir;
    std::vector<std::string> overrides;
    CLI::App* run = app.add_subcommand("run", "run an experiment from a config or preset");
    run->add_option("--config", config_path, "config JSON path");
    run->add_option("--preset", preset, "preset name (fig3, fig4, fig5, fig7, fig9, fig10)");
    run->add_option("--out", out_dir, "output directory (overrides output.dir)");
    run->add_option("--set", overrides, "dotted-key override, e.g. --set g=2")->take_all();

    std::string spec_config, spec_preset, spec_out;
    std::vector<std::string> spec_overrides;
    CLI::App* spectrum = app.add_subcommand("spectrum", "dense spectra of the one-step operator");
    spectrum->add_option("--config", spec_config, "config JSON path");
    spectrum->add_option("--preset", spec_preset, "preset name")->default_val("fig3");
    spectrum->add_option("--out", spec_out, "output directory");
    spectrum->add_option("--set", spec_overrides, "dotted-key override")->take_all();

    double pump_w = 0.25, pump_tmax = 0.0, pump_dt = 0.0;
    std::vector<double> pump_g{0.0, 0.5, 1.0};
    std::string pump_out = "out/pump";
    CLI::App* pump = app.add_subcommand("pump", "two-level rate-model sweeps");
    pump->add_option("--w", pump_w, "coupling w")->capture_default_str();
    pump->add_option("--g", pump_g, "g values")->expected(-1)->capture_default_str();
    pump->add_option("--t-max", pump_tmax, "integration time (default 25 relaxation times)");
    pump->add_option("--dt", pump_dt, "step (default 0.01 relaxation times)");
    pump->add_option("--out", pump_out, "output directory")->capture_default_str();

    std::string level = "quick";
    int criterion = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--criterion", criterion, "run a single criterion (1-11)")
        ->check(CLI::Range(0, 11));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(config_path, preset, out_dir, overrides);
        if (spectrum->parsed()) {
            // same machinery; force the spectrum task
            qaw::ExperimentConfig cfg = !spec_config.empty() ? qaw::load_config_file(spec_config)
                                                             : qaw::preset_config(spec_preset);
            if (cfg.task != qaw::Task::spectrum)
                throw qaw::ConfigError("spectrum: config/preset does not describe a spectrum task");
            if (!spec_out.empty()) cfg.output_dir = spec_out;
            cfg = apply_overrides(cfg, spec_overrides);
            const qaw::RunResult result = qaw::run_experiment(cfg);
            std::cout << "wrote " << result.files_written.size() << " files to " << cfg.output_dir
                      << '\n';
            return 0;
        }
        if (pump->parsed()) {
            namespace fs = std::filesystem;
            fs::create_directories(pump_out);
            const fs::path path = fs::path(pump_out) / "pump_trajectories.csv";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw qaw::IoError("cannot open '" + path.string() + "'");
            out << "g,t,n1,n2,n2_over_n1,stationary_ratio\n";
            for (double g : pump_g) {
                qaw::RateModel model{pump_w, g, 1.0, 0.0};
                const auto rates = qaw::golden_rule_rates(model.w, model.g);
                const double relax = rates.w12 + rates.w21;
                const double tmax = pump_tmax > 0 ? pump_tmax : 25.0 / relax;
                const double dt = pump_dt > 0 ? pump_dt : 0.01 / relax;
                for (const auto& pt : qaw::integrate_rate_equations(model, tmax, dt))
                    out << qaw::format_double(g) << ',' << qaw::format_double(pt.t) << ','
                        << qaw::format_double(pt.n1) << ',' << qaw::format_double(pt.n2) << ','
                        << qaw::format_double(pt.n2 / pt.n1) << ','
                        << qaw::format_double(qaw::stationary_ratio(g)) << '\n';
            }
            out.flush();
            if (!out) throw qaw::IoError("write failure on '" + path.string() + "'");
            std::cout << "wrote " << path.string() << '\n';
            return 0;
        }
        if (verify->parsed()) {
            const auto results = qaw::run_verification(
                level == "full" ? qaw::VerifyLevel::full : qaw::VerifyLevel::quick, std::cout,
                criterion);
            int failures = 0;
            for (const auto& r : results) failures += r.pass ? 0 : 1;
            std::cout << (failures == 0 ? "all checks passed\n"
                                        : std::to_string(failures) + " check(s) failed\n");
            return failures == 0 ? 0 : 1;
        }
    } catch (const qaw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qaw::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const qaw::BlowupError& e) {
        std::cerr << "numerical error: " << e.what() << " (step " << e.step_index << ")\n";
        return 4;
    } catch (const qaw::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 5;
    }
    return 0;
}
