#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ggt/base.hpp"

namespace ggt {

// One experiment = one output file. Fields mirror the CLI flags; a JSON echo
// of the config is the first line of every output, and re-parses to an equal
// config (round-trip tested).
struct ExperimentConfig {
    std::string subcommand;  // dynamics | packing | growth | sol | hull | cubing | check
    std::string op;          // per-subcommand operation
    std::string group;       // group descriptor
    std::string subgroup;    // ';'-separated generator literals
    std::string matrix;      // matrix literal for dynamics / sol
    std::vector<double> r_values;
    int ball_radius = -1;
    int ball_radius2 = -1;   // optional second radius (stabilization sweeps)
    int nu = 0;
    double d_bound = 0;
    double delta = 0;
    long window = 0;
    int samples = 0;
    long long trials = 0;    // randomized repetition count
    std::optional<std::uint64_t> seed;
    std::string elements;    // auxiliary element / vector literals
    std::string points;      // auxiliary point-set literal for hull ops
    std::string out_path;    // empty = stdout
    std::string dot_path;    // optional DOT export (cubing)
    std::string format = "csv";  // csv | json

    bool operator==(const ExperimentConfig&) const = default;
};

std::string config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const std::string& text);

// Pure validation; returns field-level messages (empty = ok).
std::vector<std::string> validate(const ExperimentConfig& c);

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 validation, 3 truncation warnings, 4 module error
    std::vector<std::string> warnings;
    double wall_seconds = 0;  // reported on stderr only, never in output files
};

// Dispatches to the module operations and writes the (deterministic) output
// to `out`. Identical config + seed produce byte-identical output.
RunResult run_experiment(const ExperimentConfig& c, std::ostream& out);

// Convenience: run and write to the configured path (or stdout).
RunResult run_to_configured_output(const ExperimentConfig& c);

// Formats a double with 12 significant digits (the file-format contract).
std::string fmt12(double x);

}  // namespace ggt
