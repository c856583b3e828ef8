// Run orchestration: deterministic output layout out/<scenario>/<alpha>/,
// CSV and JSON-lines emission, figure rendering, and the operations behind
// the CLI subcommands. The FRACTO_OUT environment variable overrides the
// configured output root.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fracto/analysis.hpp"
#include "fracto/runconfig.hpp"

namespace fracto::output {

/// Output root: FRACTO_OUT when set, else cfg.out_dir.
std::filesystem::path resolve_out_root(const run::RunConfig& cfg);

/// Per-(scenario, alpha) run directory under the root.
std::filesystem::path run_dir(const std::filesystem::path& root,
                              const std::string& scenario, double alpha);

struct RunSummary {
    std::vector<std::filesystem::path> run_dirs;
    bool any_blowup = false;
    bool comparison_failed = false;  // a duality bound was violated
};

/// `simulate`: runs the configured systems for every alpha, writing snapshot
/// CSVs (chain_t<t>.csv / fsg_t<t>.csv), traces, the JSON-lines sidecar and,
/// when enabled, figures.
RunSummary run_simulate(const run::RunConfig& cfg);

/// `compare`: duality runs per alpha; emits report.json, trace_compare.csv and
/// figures next to the per-alpha outputs.
RunSummary run_compare(const run::RunConfig& cfg);

/// `kernel-dump`: CSV `k,direct,series,transform_symbol,continuum_symbol`.
void run_kernel_dump(double alpha, double dx, double k_min, double k_max,
                     int samples, const std::string& out_file);

/// `tail-fit`: reads a snapshot CSV (n,x,u,v or i,x,u,v) and fits the tail.
analysis::TailFit run_tail_fit(const std::string& snapshot_csv, double x1, double x2);

struct DispersionPoint {
    double k = 0.0;
    double omega_measured = 0.0;
    double omega_predicted = 0.0;
};

/// `dispersion`: small-amplitude mode frequencies vs the analytic dispersion
/// omega^2 = J1 + J2 + J0 J_alpha(k) for the given mode numbers.
std::vector<DispersionPoint> run_dispersion(const run::RunConfig& cfg, double alpha,
                                            const std::vector<int>& modes);

/// `render`: regenerates figures from the CSV outputs of a previous run.
void run_render(const std::filesystem::path& dir);

/// Debug helper: writes `q,w` CSV of the Grunwald-Letnikov weight table.
void dump_weights(const std::string& path, double alpha, std::size_t count);

/// Figure emission used by simulate/compare (exposed for tests).
void render_duality_figure(const std::filesystem::path& dir, double alpha,
                           const lattice::ChainTrajectory* chain,
                           const fsg::FieldTrajectory* field, double dx);
void render_tails_figure(const std::filesystem::path& scenario_dir,
                         const std::vector<double>& alphas,
                         const std::vector<riesz::GridFunction>& snapshots);

}  // namespace fracto::output
