// Run configuration: a small key = value text format with optional [section]
// headers and '#' comments. Unknown keys are hard errors with line/column.
// parse_config(render_config(cfg)) round-trips exactly.
//
// Grammar (one entry per line):
//   config   := { line }
//   line     := ws [ section | entry ] ws [ comment ]
//   section  := '[' name ']'
//   entry    := key ws '=' ws value     (key scoped by the current section)
//   comment  := '#' any
// Recognized keys are listed in the README.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracto/analysis.hpp"

namespace fracto::run {

enum class SystemChoice { Lattice, Fsg, Both };

struct RunConfig {
    // top-level
    std::string scenario = "breather";  // kink | breather | custom
    SystemChoice system = SystemChoice::Both;
    std::vector<double> alphas;         // default: scenario preset list
    double t_end = 100.0;

    // [model] (filled by presets; required for scenario = custom)
    double j0 = 0.0, j1 = 0.0, j2 = 0.0;

    // [chain]
    std::size_t n_oscillators = 1001;
    double half_length = 500.0;
    lattice::Boundary boundary = lattice::Boundary::Periodic;

    // [ic]
    double kappa = 0.05;
    std::optional<double> nu;

    // [solver]
    fsg::TimeStepper time_stepper = fsg::TimeStepper::Central;
    riesz::Scheme scheme = riesz::Scheme::GL;
    double chain_dt = 0.05;
    std::optional<double> fsg_dt;  // unset = auto
    int h_ratio = 2;
    bool force_cfl = false;

    // [output]
    std::string out_dir = "out";
    double snapshot_every = 10.0;  // time units between snapshots
    bool render = true;

    analysis::Scenario to_scenario() const;
    analysis::SolverOptions solver_options() const;
};

/// Parses and validates; every default that influences a run is resolved here.
/// Throws fracto::ConfigError (with line/column) on unknown keys, malformed
/// entries, type mismatches, or invariant violations (e.g. integer alpha).
RunConfig parse_config(const std::string& text);

/// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& cfg);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace fracto::run
