#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

inline constexpr const char* kVersion = "1.0.0";

enum class Task { evolve, spectrum, survival_sweep };

std::string task_name(Task t);

// Fully resolved experiment description. Serializes to a flat JSON object
// with dotted keys; unknown keys are rejected on load.
struct ExperimentConfig {
    Task task = Task::evolve;
    std::string preset;  // informational; empty when hand-written

    int dimension = 1;
    WalkParams params;
    int extent_x = 3;
    int extent_y = 3;

    Complex initial_target{1.0, 0.0};
    int delta_x = 0;
    int delta_y = 0;
    double k_x = 0.0;
    double k_y = 0.0;

    int steps = 0;
    int snapshot_every = 0;               // 0 = explicit list only
    std::vector<int> snapshot_steps;      // merged with the cadence

    std::optional<int> survival_x_lo;
    std::optional<int> survival_x_hi;

    std::string output_dir = "out";

    double solver_tol = 1e-10;
    int solver_max_outer = 60;
    int solver_inner_iterations = 0;
    int solver_subspace = 12;
    std::uint64_t solver_seed = 20240901;

    std::vector<double> spectrum_g_values;  // spectrum task
    std::vector<int> sweep_delta_x;         // survival_sweep task
    std::vector<double> sweep_g;

    LatticeSpec lattice() const {
        return dimension == 1 ? LatticeSpec::line(extent_x) : LatticeSpec::plane(extent_x, extent_y);
    }

    void validate() const;
    std::string to_json() const;  // canonical serialization (round-trips exactly)

    bool operator==(const ExperimentConfig&) const = default;
};

// Parse "pi/8"-style angle fractions ("pi", "-pi/8", "3pi/4") or plain numbers.
double parse_angle(const std::string& text);

// Parse a config from JSON text. Unknown keys, malformed values and invariant
// violations raise ConfigError naming the field.
ExperimentConfig load_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Reproduction presets keyed by figure: fig3, fig4, fig5, fig7, fig9, fig10.
ExperimentConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace qaw
