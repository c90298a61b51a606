#pragma once

#include <stdexcept>
#include <string>

namespace qaw {

// Invalid configuration or operation preconditions (CLI exit code 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eigensolver did not reach the requested residual (CLI exit code 3).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite amplitudes detected during evolution (CLI exit code 4).
struct BlowupError : std::runtime_error {
    BlowupError(const std::string& what, int step) : std::runtime_error(what), step_index(step) {}
    int step_index;
};

// Filesystem failures while writing run artifacts (CLI exit code 5).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qaw
