#include "qaw/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qaw {

using ordered_json = nlohmann::ordered_json;

std::string task_name(Task t) {
    switch (t) {
        case Task::evolve: return "evolve";
        case Task::spectrum: return "spectrum";
        case Task::survival_sweep: return "survival_sweep";
    }
    return "evolve";
}

namespace {

Task task_from_name(const std::string& name) {
    if (name == "evolve") return Task::evolve;
    if (name == "spectrum") return Task::spectrum;
    if (name == "survival_sweep") return Task::survival_sweep;
    throw ConfigError("config: unknown task '" + name + "'");
}

}  // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ConfigError("angle: empty value");

    // plain number?
    {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end && *end == '\0') return v;
    }

    double sign = 1.0;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1.0;
        ++i;
    }
    double coeff = 1.0;
    {
        char* end = nullptr;
        const double v = std::strtod(s.c_str() + i, &end);
        if (end != s.c_str() + i) {
            coeff = v;
            i = end - s.c_str();
        }
    }
    if (s.compare(i, 2, "pi") != 0) throw ConfigError("angle: cannot parse '" + text + "'");
    i += 2;
    double denom = 1.0;
    if (i < s.size()) {
        if (s[i] != '/') throw ConfigError("angle: cannot parse '" + text + "'");
        char* end = nullptr;
        denom = std::strtod(s.c_str() + i + 1, &end);
        if (end != s.c_str() + s.size() || denom == 0.0)
            throw ConfigError("angle: cannot parse '" + text + "'");
    }
    return sign * coeff * M_PI / denom;
}

void ExperimentConfig::validate() const {
    if (dimension != 1 && dimension != 2) throw ConfigError("config: dimension must be 1 or 2");
    params.validate();
    lattice().validate();

    if (task == Task::evolve) {
        if (std::abs(std::abs(initial_target) - 1.0) > 1e-6)
            throw ConfigError("config: initial.target must lie on the unit circle");
        if (std::abs(delta_x) >= extent_x)
            throw ConfigError("config: initial.delta_x must satisfy |delta| < extent_x");
        if (dimension == 2 && std::abs(delta_y) >= extent_y)
            throw ConfigError("config: initial.delta_y must satisfy |delta| < extent_y");
    }
    if (steps < 0) throw ConfigError("config: steps must be non-negative");
    if (snapshot_every < 0) throw ConfigError("config: snapshot.every must be non-negative");
    for (int s : snapshot_steps)
        if (s < 0 || s > steps)
            throw ConfigError("config: snapshot.steps entries must lie in [0, steps]");

    if (survival_x_lo.has_value() != survival_x_hi.has_value())
        throw ConfigError("config: survival.x_lo and survival.x_hi must be given together");
    if (survival_x_lo) {
        if (dimension != 1) throw ConfigError("config: survival region applies to 1D runs only");
        const int half = (extent_x - 1) / 2;
        if (*survival_x_lo > *survival_x_hi) throw ConfigError("config: empty survival region");
        if (*survival_x_lo < -half || *survival_x_hi > half)
            throw ConfigError("config: survival region outside the lattice");
    }
    if (output_dir.empty()) throw ConfigError("config: output.dir must not be empty");
    if (!(solver_tol > 0.0)) throw ConfigError("config: solver.tol must be positive");
    if (solver_max_outer < 1) throw ConfigError("config: solver.max_outer must be >= 1");
    if (solver_subspace < 2) throw ConfigError("config: solver.subspace must be >= 2");

    if (task == Task::spectrum) {
        if (spectrum_g_values.empty())
            throw ConfigError("config: spectrum.g_values must not be empty");
        const long dim = lattice().state_dim();
        if (dim > 10000) throw ConfigError("config: spectrum task exceeds the dense guard");
    }
    if (task == Task::survival_sweep) {
        if (dimension != 1) throw ConfigError("config: survival_sweep is a 1D task");
        if (sweep_delta_x.empty() || sweep_g.empty())
            throw ConfigError("config: sweep.delta_x and sweep.g must not be empty");
        if (!survival_x_lo) throw ConfigError("config: survival_sweep requires a survival region");
        for (int d : sweep_delta_x)
            if (std::abs(d) >= extent_x)
                throw ConfigError("config: sweep.delta_x entries must satisfy |delta| < extent_x");
        for (double gv : sweep_g)
            if (std::abs(gv) > kMaxGaugeParameter)
                throw ConfigError("config: sweep.g entries exceed the |g| cap of 20");
    }
}

std::string ExperimentConfig::to_json() const {
    ordered_json j;
    j["task"] = task_name(task);
    if (!preset.empty()) j["preset"] = preset;
    j["dimension"] = dimension;
    j["theta0"] = params.theta0;
    j["epsilon"] = params.epsilon;
    j["w"] = params.w;
    j["alpha"] = params.alpha;
    j["beta"] = params.beta;
    j["g"] = params.g;
    j["lattice.extent_x"] = extent_x;
    if (dimension == 2) j["lattice.extent_y"] = extent_y;
    j["initial.target_re"] = initial_target.real();
    j["initial.target_im"] = initial_target.imag();
    j["initial.delta_x"] = delta_x;
    if (dimension == 2) {
        j["initial.delta_y"] = delta_y;
        j["initial.k_x"] = k_x;
        j["initial.k_y"] = k_y;
    }
    j["steps"] = steps;
    j["snapshot.every"] = snapshot_every;
    if (!snapshot_steps.empty()) j["snapshot.steps"] = snapshot_steps;
    if (survival_x_lo) {
        j["survival.x_lo"] = *survival_x_lo;
        j["survival.x_hi"] = *survival_x_hi;
    }
    j["output.dir"] = output_dir;
    j["solver.tol"] = solver_tol;
    j["solver.max_outer"] = solver_max_outer;
    j["solver.inner_iterations"] = solver_inner_iterations;
    j["solver.subspace"] = solver_subspace;
    j["solver.seed"] = solver_seed;
    if (!spectrum_g_values.empty()) j["spectrum.g_values"] = spectrum_g_values;
    if (!sweep_delta_x.empty()) j["sweep.delta_x"] = sweep_delta_x;
    if (!sweep_g.empty()) j["sweep.g"] = sweep_g;
    return j.dump(2) + "\n";
}

namespace {

double angle_field(const ordered_json& v, const std::string& key) {
    if (v.is_string()) return parse_angle(v.get<std::string>());
    if (v.is_number()) return v.get<double>();
    throw ConfigError("config: field '" + key + "' must be a number or an angle string");
}

template <typename T>
T numeric_field(const ordered_json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("config: field '" + key + "' must be a number");
    return v.get<T>();
}

}  // namespace

ExperimentConfig load_config_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "task") c.task = task_from_name(value.get<std::string>());
        else if (key == "preset") c.preset = value.get<std::string>();
        else if (key == "dimension") c.dimension = numeric_field<int>(value, key);
        else if (key == "theta0") c.params.theta0 = angle_field(value, key);
        else if (key == "epsilon") c.params.epsilon = numeric_field<double>(value, key);
        else if (key == "w") c.params.w = numeric_field<double>(value, key);
        else if (key == "alpha") c.params.alpha = numeric_field<double>(value, key);
        else if (key == "beta") c.params.beta = numeric_field<double>(value, key);
        else if (key == "g") c.params.g = numeric_field<double>(value, key);
        else if (key == "lattice.extent_x") c.extent_x = numeric_field<int>(value, key);
        else if (key == "lattice.extent_y") c.extent_y = numeric_field<int>(value, key);
        else if (key == "initial.target_re")
            c.initial_target = Complex(numeric_field<double>(value, key), c.initial_target.imag());
        else if (key == "initial.target_im")
            c.initial_target = Complex(c.initial_target.real(), numeric_field<double>(value, key));
        else if (key == "initial.delta_x") c.delta_x = numeric_field<int>(value, key);
        else if (key == "initial.delta_y") c.delta_y = numeric_field<int>(value, key);
        else if (key == "initial.k_x") c.k_x = angle_field(value, key);
        else if (key == "initial.k_y") c.k_y = angle_field(value, key);
        else if (key == "steps") c.steps = numeric_field<int>(value, key);
        else if (key == "snapshot.every") c.snapshot_every = numeric_field<int>(value, key);
        else if (key == "snapshot.steps") c.snapshot_steps = value.get<std::vector<int>>();
        else if (key == "survival.x_lo") c.survival_x_lo = numeric_field<int>(value, key);
        else if (key == "survival.x_hi") c.survival_x_hi = numeric_field<int>(value, key);
        else if (key == "output.dir") c.output_dir = value.get<std::string>();
        else if (key == "solver.tol") c.solver_tol = numeric_field<double>(value, key);
        else if (key == "solver.max_outer") c.solver_max_outer = numeric_field<int>(value, key);
        else if (key == "solver.inner_iterations")
            c.solver_inner_iterations = numeric_field<int>(value, key);
        else if (key == "solver.subspace") c.solver_subspace = numeric_field<int>(value, key);
        else if (key == "solver.seed") c.solver_seed = value.get<std::uint64_t>();
        else if (key == "spectrum.g_values") c.spectrum_g_values = value.get<std::vector<double>>();
        else if (key == "sweep.delta_x") c.sweep_delta_x = value.get<std::vector<int>>();
        else if (key == "sweep.g") c.sweep_g = value.get<std::vector<double>>();
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str());
}

namespace {

// Eq. 15 and Eq. 27 parameter sets; the quoted eigenvalues anchor the
// reproduction targets.
constexpr Complex kTarget1D{0.9378050525983931, 0.3471623299278579};
constexpr Complex kTarget2D{0.9336010518344118, 0.3583142140826795};
// Well-bound 2D eigenstate closest to unity; used for the dynamics preset
// (see README: the quoted 2D value selects a delocalized resonance here).
constexpr Complex kBound2D{0.9366538888597996, 0.3502563239740493};

WalkParams params_1d(double g) { return WalkParams{M_PI / 8.0, 0.25, 0.25, 1.0, 0.025, g}; }
WalkParams params_2d(double g) { return WalkParams{M_PI / 8.0, 0.25, 0.25, 0.5, 0.05, g}; }

}  // namespace

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig c;
    c.preset = name;
    if (name == "fig3") {
        c.task = Task::spectrum;
        c.dimension = 1;
        c.params = params_1d(0.0);
        c.extent_x = 21;
        c.spectrum_g_values = {0.0, 1.0};
    } else if (name == "fig4") {
        c.task = Task::evolve;
        c.dimension = 1;
        c.params = params_1d(0.0);
        c.extent_x = 801;
        c.initial_target = kTarget1D;
        c.delta_x = 19;
        c.steps = 0;
        c.snapshot_steps = {0};
    } else if (name == "fig5") {
        c.task = Task::survival_sweep;
        c.dimension = 1;
        c.params = params_1d(0.0);
        c.extent_x = 401;
        c.initial_target = kTarget1D;
        c.steps = 400;
        c.survival_x_lo = -80;
        c.survival_x_hi = 0;
        c.sweep_delta_x = {9, 14, 19, 24, 29};
        for (int i = 0; i <= 20; ++i) c.sweep_g.push_back(0.5 * i);
    } else if (name == "fig7") {
        c.task = Task::evolve;
        c.dimension = 1;
        c.params = params_1d(1.0);
        c.extent_x = 801;
        c.initial_target = kTarget1D;
        c.delta_x = 19;
        c.steps = 400;
        c.snapshot_every = 1;
        c.survival_x_lo = -80;
        c.survival_x_hi = 0;
    } else if (name == "fig9") {
        c.task = Task::evolve;
        c.dimension = 2;
        c.params = params_2d(0.0);
        c.extent_x = c.extent_y = 71;
        c.initial_target = kTarget2D;
        c.delta_x = 9;
        c.delta_y = 0;
        c.k_x = 0.0;
        c.k_y = M_PI;
        c.steps = 0;
        c.snapshot_steps = {0};
        c.solver_tol = 1e-9;
    } else if (name == "fig10") {
        c.task = Task::evolve;
        c.dimension = 2;
        c.params = params_2d(1.0);
        c.extent_x = c.extent_y = 71;
        c.initial_target = kBound2D;
        c.delta_x = 9;
        c.delta_y = 0;
        c.k_x = 0.0;
        c.k_y = M_PI;
        c.steps = 100;
        c.snapshot_every = 5;
        c.solver_tol = 1e-8;
    } else {
        throw ConfigError("config: unknown preset '" + name + "'");
    }
    c.validate();
    return c;
}

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig7", "fig9", "fig10"};
}

}  // namespace qaw
