// Finite chain of N+1 oscillators with power-law long-range coupling:
//   u_n'' + J0 sum_{m != n} |n-m|^-(1+alpha) u_m + J1 u_n + J2 sin u_n = 0,
// n = -N/2 .. N/2 (mass 1, on-site period 2 pi). The interaction sum runs
// strictly over the stored chain; the declared boundary condition is metadata
// for the continuum solver's edge policy, not a ghost-image rule.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracto/errors.hpp"
#include "fracto/kernel.hpp"

namespace fracto::lattice {

/// Physical constants of Eq. of motion; mass M = 1 and on-site period a = 2 pi
/// are fixed.
struct ModelParams {
    kernel::FractionalOrder alpha;
    double j0 = 0.0;  // coupling amplitude
    double j1 = 0.0;  // linear on-site stiffness
    double j2 = 0.0;  // sine on-site amplitude

    ModelParams(kernel::FractionalOrder a, double j0_, double j1_, double j2_);
};

enum class Boundary {
    KinkShift,  // u_{n + (N+1)} = u_n + 2 pi
    Periodic,   // u_{n + (N+1)} = u_n
};

struct ChainParams {
    std::size_t n_oscillators = 0;  // N+1, odd
    double half_length = 0.0;       // L
    Boundary boundary = Boundary::Periodic;

    ChainParams(std::size_t n, double L, Boundary b);

    double dx() const { return 2.0 * half_length / double(n_oscillators); }
    /// Oscillator position x_n = n dx for n = -N/2 .. N/2 (index i = n + N/2).
    double x(std::size_t i) const {
        return (double(i) - double(n_oscillators - 1) / 2.0) * dx();
    }
};

struct ChainState {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

/// weights[d-1] = d^-(1+alpha) for distances d = 1 .. N.
struct CouplingKernel {
    std::vector<double> weights;
};

struct ChainRhs {
    std::vector<double> du;
    std::vector<double> dv;
};

CouplingKernel build_kernel(const ChainParams& params,
                            const kernel::FractionalOrder& order);

/// c[i] = sum_{j != i} weights[|i-j|] u[j]; FFT Toeplitz path by default,
/// naive double loop when accelerate = false (the validation oracle).
std::vector<double> coupling_sum(const CouplingKernel& kernel,
                                 const std::vector<double>& u,
                                 bool accelerate = true);

ChainRhs chain_rhs(const ChainState& state, const ModelParams& model,
                   const CouplingKernel& kernel, bool accelerate = true);

/// H = sum_n [ v_n^2/2 + (J0/2) sum_{m != n} u_n u_m |n-m|^-(1+alpha)
///             + (J1/2) u_n^2 + J2 (1 - cos u_n) ].
double chain_energy(const ChainState& state, const ModelParams& model,
                    const CouplingKernel& kernel, bool accelerate = true);

/// Classical 4-stage Runge-Kutta step; throws BlowupError past 1e12.
ChainState rk4_step(const ChainState& state, const ModelParams& model,
                    const CouplingKernel& kernel, double dt);

/// Kink profile u(x) = 4 arctan(kappa e^x); saturates to 2 pi analytically for
/// large x (no overflow).
double kink_displacement(double x, double kappa);
/// Breather profile u(x) = 4 arctan(nu / (kappa cosh x)).
double breather_displacement(double x, double nu, double kappa);

ChainState init_kink(const ChainParams& params, const ModelParams& model,
                     double kappa);
ChainState init_breather(const ChainParams& params, const ModelParams& model,
                         double nu, double kappa);

struct Snapshot {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

struct ChainTrajectory {
    std::vector<Snapshot> snapshots;           // every snapshot_every steps
    std::vector<double> trace_t;               // every step
    std::vector<double> trace_u_center;        // u_0(t)
    std::vector<std::pair<double, double>> energy;  // (t, H) at snapshot times
    std::optional<long> blowup_step;           // set when the run diverged
};

struct ChainRunSpec {
    ChainParams chain;
    ModelParams model;
    double dt = 0.05;
    double t_end = 100.0;
    long snapshot_every = 100;  // steps between stored snapshots
    bool accelerate = true;
};

/// Integrates from the given initial state at t = 0. Deterministic: fixed
/// summation order, t = step * dt. On divergence the trajectory holds the
/// last valid snapshot and the blow-up step.
ChainTrajectory simulate_chain(const ChainRunSpec& spec, const ChainState& initial);

}  // namespace fracto::lattice
