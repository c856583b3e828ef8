// Time integration of the fractional sine-Gordon equation on (-L, L):
//   u_tt - Jb0 a_alpha (d^alpha/d|x|^alpha) u + J1 u + J2 sin u = 0,
// Jb0 = J0 |dx|^min(alpha,2), solved on a grid of spacing h = dx / h_ratio
// with the Riesz operator discretizations from fracto::riesz. Explicit
// central differencing (CFL-guarded) and classical RK4 steppers.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracto/errors.hpp"
#include "fracto/lattice.hpp"
#include "fracto/riesz.hpp"

namespace fracto::fsg {

struct FieldParams {
    lattice::ModelParams model;
    std::size_t n_oscillators = 0;  // N+1 of the matching chain (odd)
    double half_length = 0.0;       // L
    int h_ratio = 2;                // state grid spacing h = dx / h_ratio
    riesz::Scheme scheme = riesz::Scheme::GL;
    riesz::EdgePolicy edge_policy = riesz::EdgePolicy::PeriodicExtension;
    bool accelerate = true;

    FieldParams(lattice::ModelParams m, std::size_t n, double L);

    double dx() const { return 2.0 * half_length / double(n_oscillators); }
    double h() const { return dx() / double(h_ratio); }
    /// Jb0 = J0 |dx|^min(alpha, 2); recomputed, never stored.
    double jbar0() const;
    /// Number of state-grid points: h_ratio * N + 1, spanning +-N dx / 2.
    std::size_t grid_points() const {
        return std::size_t(h_ratio) * (n_oscillators - 1) + 1;
    }
    riesz::RieszOperatorConfig riesz_config() const;
    /// Initial grid skeleton (values zeroed).
    riesz::GridFunction make_grid() const;
};

/// External view of the field state; v = du/dt.
struct FieldState {
    double t = 0.0;
    riesz::GridFunction u;
    riesz::GridFunction v;
};

/// State carried by the explicit central-difference stepper.
struct CentralState {
    double t = 0.0;
    riesz::GridFunction u;
    riesz::GridFunction u_prev;
};

/// Acceleration field Jb0 a_alpha (Riesz u) - J1 u - J2 sin u.
riesz::GridFunction fsg_rhs(const riesz::GridFunction& u, const FieldParams& params);

/// Courant-Friedrichs-Lewy guard for explicit central differencing:
/// dt / dx^alpha < 1/2.
bool cfl_check(double dt, double dx, const kernel::FractionalOrder& order);

/// u_next = 2u - u_prev + dt^2 rhs(u); throws BlowupError past 1e12.
void step_central(CentralState& state, const FieldParams& params, double dt);

/// Classical RK4 on (u, v); throws BlowupError past 1e12.
void step_rk4_field(FieldState& state, const FieldParams& params, double dt);

enum class TimeStepper { Rk4, Central };

struct FieldSnapshot {
    double t = 0.0;
    std::vector<double> u;  // on the coarse oscillator grid (x_n = n dx)
    std::vector<double> v;
};

struct FieldTrajectory {
    std::vector<FieldSnapshot> snapshots;
    std::vector<double> trace_t;
    std::vector<double> trace_u_center;  // u(0, t)
    std::optional<long> blowup_step;
    /// Full state-grid field at the final recorded time (diagnostics).
    riesz::GridFunction final_u;
};

struct FieldRunSpec {
    FieldParams params;
    TimeStepper stepper = TimeStepper::Central;
    double dt = 0.01;
    double t_end = 100.0;
    long snapshot_every = 1000;  // steps
    bool force_cfl = false;      // run central differencing past the CFL bound
};

/// Deterministic trajectory from the given initial displacement field
/// (v(x,0) = 0 unless v0 provided). Snapshots/traces are restricted to the
/// coarse oscillator grid; the central stepper bootstraps its first step with
/// a second-order Taylor start. Refuses CFL-violating central runs unless
/// force_cfl is set.
FieldTrajectory simulate_fsg(const FieldRunSpec& spec, const riesz::GridFunction& u0,
                             const riesz::GridFunction* v0 = nullptr);

}  // namespace fracto::fsg
