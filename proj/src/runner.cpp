#include "qaw/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "qaw/dense.hpp"
#include "qaw/eigensolver.hpp"
#include "qaw/observables.hpp"

namespace fs = std::filesystem;

namespace qaw {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

constexpr int kMax2DSnapshots = 200;

std::ofstream open_output(const fs::path& path, std::vector<std::string>& files) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical reruns
    if (!out) throw IoError("cannot open output file '" + path.string() + "'");
    files.push_back(path.filename().string());
    return out;
}

void finish_file(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::vector<int> snapshot_schedule(const ExperimentConfig& cfg, std::vector<std::string>& warnings) {
    std::vector<int> steps = cfg.snapshot_steps;
    if (cfg.snapshot_every > 0)
        for (int t = 0; t <= cfg.steps; t += cfg.snapshot_every) steps.push_back(t);
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    if (cfg.dimension == 2 && static_cast<int>(steps.size()) > kMax2DSnapshots) {
        // thin uniformly, keeping first and last
        std::vector<int> thinned;
        const int n = static_cast<int>(steps.size());
        for (int i = 0; i < kMax2DSnapshots; ++i)
            thinned.push_back(steps[static_cast<long>(i) * (n - 1) / (kMax2DSnapshots - 1)]);
        thinned.erase(std::unique(thinned.begin(), thinned.end()), thinned.end());
        warnings.push_back("2D snapshot request thinned from " + std::to_string(n) + " to " +
                           std::to_string(thinned.size()) + " files");
        steps = std::move(thinned);
    }
    return steps;
}

void write_records_csv(const fs::path& dir, const ExperimentConfig& cfg,
                       const std::vector<ObservableRecord>& records,
                       std::vector<std::string>& files) {
    const fs::path path = dir / "records.csv";
    std::ofstream out = open_output(path, files);
    if (cfg.dimension == 1) {
        out << "T,total_probability,mean_x,sd_x,survival,mean_x_ground,sd_x_ground,"
               "mean_x_excited,sd_x_excited\n";
        for (const auto& r : records) {
            out << r.step << ',' << format_double(r.total_probability) << ','
                << format_double(r.mean_x) << ',' << format_double(r.sd_x) << ',';
            if (r.survival) out << format_double(*r.survival);
            out << ',' << format_double(r.mean_x_ground) << ',' << format_double(r.sd_x_ground)
                << ',' << format_double(r.mean_x_excited) << ',' << format_double(r.sd_x_excited)
                << '\n';
        }
    } else {
        out << "T,total_probability,mean_x,sd_x,mean_y,sd_y\n";
        for (const auto& r : records)
            out << r.step << ',' << format_double(r.total_probability) << ','
                << format_double(r.mean_x) << ',' << format_double(r.sd_x) << ','
                << format_double(r.mean_y) << ',' << format_double(r.sd_y) << '\n';
    }
    finish_file(out, path);
}

void write_density_csv(const fs::path& dir, const ExperimentConfig& cfg,
                       const DensitySnapshot& snap, std::vector<std::string>& files) {
    const fs::path path = dir / ("density_" + std::to_string(snap.step) + ".csv");
    std::ofstream out = open_output(path, files);
    const LatticeSpec lat = cfg.lattice();
    if (cfg.dimension == 1) {
        out << "x,P_G,P_E,P\n";
        for (int x = -lat.half_x(); x <= lat.half_x(); ++x) {
            const long s = lat.site_index(x);
            out << x << ',' << format_double(snap.density.ground[s]) << ','
                << format_double(snap.density.excited[s]) << ','
                << format_double(snap.density.total[s]) << '\n';
        }
    } else {
        // header line gives the extents; then the row-major P(x, y) matrix,
        // one y row per line
        out << lat.extent_x << ',' << lat.extent_y << '\n';
        for (int iy = 0; iy < lat.extent_y; ++iy) {
            for (int ix = 0; ix < lat.extent_x; ++ix) {
                if (ix) out << ',';
                out << format_double(snap.density.total[static_cast<long>(iy) * lat.extent_x + ix]);
            }
            out << '\n';
        }
    }
    finish_file(out, path);
}

void write_eigenpair_json(const fs::path& dir, const ExperimentConfig& cfg, const EigenPair& pair,
                          const SolverReport& report, std::vector<std::string>& files) {
    const fs::path path = dir / "eigenpair.json";
    std::ofstream out = open_output(path, files);
    nlohmann::ordered_json j;
    j["eigenvalue_re"] = pair.eigenvalue.real();
    j["eigenvalue_im"] = pair.eigenvalue.imag();
    j["residual"] = pair.residual;
    j["target_re"] = cfg.initial_target.real();
    j["target_im"] = cfg.initial_target.imag();
    j["target_distance"] = std::abs(pair.eigenvalue - cfg.initial_target);
    j["outer_rounds"] = report.outer_rounds;
    j["operator_applies"] = report.operator_applies;
    out << j.dump(2) << '\n';
    finish_file(out, path);
}

void write_manifest(const fs::path& dir, const ExperimentConfig& cfg, RunResult& result) {
    const fs::path path = dir / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path.string() + "'");
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config"] = nlohmann::ordered_json::parse(cfg.to_json());
    j["wall_time_seconds"] = result.wall_seconds;
    j["warnings"] = result.warnings;
    j["files"] = result.files_written;
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw IoError("write failure on '" + path.string() + "'");
    result.files_written.push_back("manifest.json");
}

void run_evolve(const ExperimentConfig& cfg, const fs::path& dir, RunResult& result) {
    WalkParams params0 = cfg.params;
    params0.g = 0.0;  // initial states are prepared from the g = 0 eigenstate
    SolverOptions opts;
    opts.tol = cfg.solver_tol;
    opts.max_outer = cfg.solver_max_outer;
    opts.inner_iterations = cfg.solver_inner_iterations;
    opts.subspace = cfg.solver_subspace;
    opts.seed = cfg.solver_seed;
    SolverReport report;
    const EigenPair pair = find_eigenpair(params0, cfg.lattice(), cfg.initial_target, opts, &report);

    WaveFunction initial = cfg.dimension == 1
                               ? prepare_initial_1d(pair, cfg.delta_x)
                               : prepare_initial_2d(pair, cfg.delta_x, cfg.delta_y, cfg.k_x, cfg.k_y);

    EvolveOptions eopts;
    eopts.steps = cfg.steps;
    eopts.snapshot_steps = snapshot_schedule(cfg, result.warnings);
    if (cfg.survival_x_lo) eopts.survival = SurvivalRegion{*cfg.survival_x_lo, *cfg.survival_x_hi};

    const EvolveResult evo = evolve_and_record(initial, cfg.params, eopts);

    for (const auto& rec : evo.records) {
        if (rec.wrap_exposed) {
            result.warnings.push_back("wrap exposure: > 1% of probability within 2 sites of the "
                                      "boundary, first at step " + std::to_string(rec.step));
            break;
        }
    }

    write_records_csv(dir, cfg, evo.records, result.files_written);
    for (const auto& snap : evo.snapshots) write_density_csv(dir, cfg, snap, result.files_written);
    write_eigenpair_json(dir, cfg, pair, report, result.files_written);
}

void run_spectrum(const ExperimentConfig& cfg, const fs::path& dir, RunResult& result) {
    for (double g : cfg.spectrum_g_values) {
        WalkParams params = cfg.params;
        params.g = g;
        const Eigen::MatrixXcd u = dense_evolution_matrix(params, cfg.lattice());
        SpectrumResult spec = dense_spectrum(u);
        if (!spec.converged)
            throw SolverError("dense spectrum did not converge for g = " + format_double(g));
        std::vector<Complex> vals(spec.eigenvalues.data(),
                                  spec.eigenvalues.data() + spec.eigenvalues.size());
        std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
            return std::arg(a) != std::arg(b) ? std::arg(a) < std::arg(b) : std::abs(a) < std::abs(b);
        });
        char gbuf[32];
        std::snprintf(gbuf, sizeof(gbuf), "%g", g);
        const fs::path path = dir / ("spectrum_g" + std::string(gbuf) + ".csv");
        std::ofstream out = open_output(path, result.files_written);
        out << "re,im,abs\n";
        for (Complex v : vals)
            out << format_double(v.real()) << ',' << format_double(v.imag()) << ','
                << format_double(std::abs(v)) << '\n';
        finish_file(out, path);
    }
}

void run_survival_sweep(const ExperimentConfig& cfg, const fs::path& dir, RunResult& result) {
    WalkParams params0 = cfg.params;
    params0.g = 0.0;
    SolverOptions opts;
    opts.tol = cfg.solver_tol;
    opts.max_outer = cfg.solver_max_outer;
    opts.inner_iterations = cfg.solver_inner_iterations;
    opts.subspace = cfg.solver_subspace;
    opts.seed = cfg.solver_seed;
    const EigenPair pair = find_eigenpair(params0, cfg.lattice(), cfg.initial_target, opts);

    const fs::path sweep_path = dir / "survival_sweep.csv";
    std::ofstream sweep = open_output(sweep_path, result.files_written);
    sweep << "delta_x,g,survival\n";
    const fs::path series_path = dir / "survival_series.csv";
    std::ofstream series = open_output(series_path, result.files_written);
    series << "delta_x,g,T,survival\n";

    EvolveOptions eopts;
    eopts.steps = cfg.steps;
    eopts.survival = SurvivalRegion{*cfg.survival_x_lo, *cfg.survival_x_hi};

    for (int delta : cfg.sweep_delta_x) {
        const WaveFunction initial = prepare_initial_1d(pair, delta);
        for (double g : cfg.sweep_g) {
            WalkParams params = cfg.params;
            params.g = g;
            const EvolveResult evo = evolve_and_record(initial, params, eopts);
            for (const auto& rec : evo.records)
                series << delta << ',' << format_double(g) << ',' << rec.step << ','
                       << format_double(*rec.survival) << '\n';
            sweep << delta << ',' << format_double(g) << ','
                  << format_double(*evo.records.back().survival) << '\n';
        }
    }
    finish_file(sweep, sweep_path);
    finish_file(series, series_path);
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    RunResult result;
    result.config = cfg;
    fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + cfg.output_dir + "'");

    switch (cfg.task) {
        case Task::evolve: run_evolve(cfg, dir, result); break;
        case Task::spectrum: run_spectrum(cfg, dir, result); break;
        case Task::survival_sweep: run_survival_sweep(cfg, dir, result); break;
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(dir, cfg, result);
    return result;
}

}  // namespace qaw
