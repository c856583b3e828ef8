// Scenario presets, lattice-vs-continuum duality metrics, power-law tail
// fitting and the exponential/power-law crossover locator.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracto/fsg.hpp"
#include "fracto/lattice.hpp"

namespace fracto::analysis {

enum class ScenarioKind { Kink, Breather };

struct Scenario {
    ScenarioKind kind = ScenarioKind::Breather;
    double j0 = 0.0, j1 = 0.0, j2 = 0.0;
    std::size_t n_oscillators = 0;
    double half_length = 0.0;
    lattice::Boundary boundary = lattice::Boundary::Periodic;
    double kappa = 0.0;
    std::optional<double> nu;  // breather only
    double t_end = 100.0;
    std::vector<double> alphas;
};

/// Kink preset: kappa = 0.001, J1 = 0.2, J0 = J2 = 0.01, alpha = 1.21,
/// N+1 = 1001, L = 500, kink-shift boundary.
Scenario kink_scenario();
/// Breather preset: nu = 1, kappa = 0.05, J0 = 0.01, J1 = J2 = 0.1,
/// N+1 = 1001, L = 500, periodic boundary, alpha in {1.21, 1.51, 1.91}.
Scenario breather_scenario();

struct TailFit {
    double slope = 0.0;
    double r2 = 0.0;
};

/// Least-squares slope of log|u| vs log x over x in [x1, x2] (x > 0 samples
/// with |u| > 1e-14). Throws std::invalid_argument for windows with < 10
/// usable samples.
TailFit tail_slope(const riesz::GridFunction& snapshot, double x1, double x2);

/// Two-segment fit: affine in (x, log|u|) below x*, affine in (log x, log|u|)
/// above; grid search over sample points. Throws ComparisonFailure when the
/// best two-segment fit improves on the best single-segment fit by < 5%.
double crossover_locate(const riesz::GridFunction& snapshot, double x_min,
                        double x_max);

struct SolverOptions {
    fsg::TimeStepper stepper = fsg::TimeStepper::Central;
    riesz::Scheme scheme = riesz::Scheme::GL;
    double chain_dt = 0.05;
    std::optional<double> fsg_dt;  // default: 0.01 (rk4), min(0.01, 0.45 dx^a) (central)
    int h_ratio = 2;
    bool force_cfl = false;
    long chain_snapshot_every = 200;   // steps
    long fsg_snapshot_every = 1000;    // steps
    bool accelerate = true;
};

double default_fsg_dt(fsg::TimeStepper stepper, double dx, double alpha);

struct ComparisonReport {
    double alpha = 0.0;
    double center_trace_rmse = 0.0;
    double center_trace_linf = 0.0;
    double trace_amplitude = 0.0;  // half peak-to-peak of the lattice trace
    std::vector<std::pair<double, double>> field_linf_over_time;
    double tail_slope = 0.0;
    double tail_r2 = 0.0;
    std::optional<double> crossover_x;
    bool lattice_blowup = false;
    bool fsg_blowup = false;
    lattice::ChainTrajectory lattice_trajectory;
    fsg::FieldTrajectory fsg_trajectory;
};

/// Runs both arms from identical initial samples, aligns traces on the
/// coarser cadence and fields on the oscillator grid, and reports RMSE/L-inf
/// plus tail diagnostics of the final lattice snapshot. A blow-up in either
/// arm marks the comparison failed (metrics cover the overlapping window).
ComparisonReport run_duality(const Scenario& scenario, double alpha,
                             const SolverOptions& opts);

/// Measured oscillation frequency of the k-mode of the linearized chain
/// (sin u -> u, i.e. J1+J2 on-site), via zero-crossing timing of the mode
/// amplitude. k must be a multiple of pi / L (within 1e-9 relative).
double dispersion_probe(const lattice::ModelParams& model,
                        const lattice::ChainParams& chain, double k);

}  // namespace fracto::analysis
