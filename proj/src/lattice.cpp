#include "fracto/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracto/fastconv.hpp"

namespace fracto::lattice {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::fabs(x));
    for (double x : b) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace

ModelParams::ModelParams(kernel::FractionalOrder a, double j0_, double j1_, double j2_)
    : alpha(a), j0(j0_), j1(j1_), j2(j2_) {
    if (j0 < 0.0 || j1 < 0.0 || j2 < 0.0) {
        throw std::domain_error("ModelParams: J0, J1, J2 must be non-negative");
    }
}

ChainParams::ChainParams(std::size_t n, double L, Boundary b)
    : n_oscillators(n), half_length(L), boundary(b) {
    if (n < 3 || n % 2 == 0) {
        throw std::domain_error("ChainParams: n_oscillators must be odd and >= 3 "
                                "(N even)");
    }
    if (!(L > 0.0)) throw std::domain_error("ChainParams: half_length must be > 0");
}

CouplingKernel build_kernel(const ChainParams& params,
                            const kernel::FractionalOrder& order) {
    const std::size_t N = params.n_oscillators - 1;
    CouplingKernel k;
    k.weights.resize(N);
    const double e = 1.0 + order.value();
    for (std::size_t d = 1; d <= N; ++d) {
        k.weights[d - 1] = std::pow(double(d), -e);
    }
    return k;
}

std::vector<double> coupling_sum(const CouplingKernel& kernel,
                                 const std::vector<double>& u, bool accelerate) {
    const std::size_t n = u.size();
    if (n == 0) return {};
    if (kernel.weights.size() + 1 < n) {
        throw std::invalid_argument("coupling_sum: kernel shorter than the chain");
    }
    if (!accelerate) {
        std::vector<double> out(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const std::size_t d = (j > i) ? (j - i) : (i - j);
                s += kernel.weights[d - 1] * u[j];
            }
            out[i] = s;
        }
        return out;
    }
    // symmetric Toeplitz kernel over offsets -(n-1) .. (n-1), zero at 0
    std::vector<double> full(2 * n - 1, 0.0);
    for (std::size_t d = 1; d < n; ++d) {
        full[(n - 1) + d] = kernel.weights[d - 1];
        full[(n - 1) - d] = kernel.weights[d - 1];
    }
    const auto conv = fft::linear_convolve(full, u);
    return std::vector<double>(conv.begin() + long(n - 1), conv.begin() + long(2 * n - 1));
}

ChainRhs chain_rhs(const ChainState& state, const ModelParams& model,
                   const CouplingKernel& kernel, bool accelerate) {
    const std::size_t n = state.u.size();
    ChainRhs rhs;
    rhs.du = state.v;
    rhs.dv = coupling_sum(kernel, state.u, accelerate);
    for (std::size_t i = 0; i < n; ++i) {
        rhs.dv[i] = -model.j0 * rhs.dv[i] - model.j1 * state.u[i] -
                    model.j2 * std::sin(state.u[i]);
    }
    return rhs;
}

double chain_energy(const ChainState& state, const ModelParams& model,
                    const CouplingKernel& kernel, bool accelerate) {
    const auto cu = coupling_sum(kernel, state.u, accelerate);
    double H = 0.0;
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        H += 0.5 * state.v[i] * state.v[i] +
             0.5 * model.j0 * state.u[i] * cu[i] +
             0.5 * model.j1 * state.u[i] * state.u[i] +
             model.j2 * (1.0 - std::cos(state.u[i]));
    }
    return H;
}

ChainState rk4_step(const ChainState& state, const ModelParams& model,
                    const CouplingKernel& kernel, double dt) {
    if (dt < 0.0) throw std::domain_error("rk4_step: dt must be >= 0");
    const std::size_t n = state.u.size();
    auto stage = [&](const std::vector<double>& u, const std::vector<double>& v) {
        ChainState s;
        s.u = u;
        s.v = v;
        return chain_rhs(s, model, kernel);
    };
    const ChainRhs k1 = stage(state.u, state.v);
    std::vector<double> tu(n), tv(n);
    auto axpy = [&](const std::vector<double>& base, const std::vector<double>& d,
                    double c, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + c * d[i];
    };
    axpy(state.u, k1.du, 0.5 * dt, tu);
    axpy(state.v, k1.dv, 0.5 * dt, tv);
    const ChainRhs k2 = stage(tu, tv);
    axpy(state.u, k2.du, 0.5 * dt, tu);
    axpy(state.v, k2.dv, 0.5 * dt, tv);
    const ChainRhs k3 = stage(tu, tv);
    axpy(state.u, k3.du, dt, tu);
    axpy(state.v, k3.dv, dt, tv);
    const ChainRhs k4 = stage(tu, tv);

    ChainState out;
    out.t = state.t + dt;
    out.u.resize(n);
    out.v.resize(n);
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.u[i] = state.u[i] + c * (k1.du[i] + 2.0 * k2.du[i] + 2.0 * k3.du[i] + k4.du[i]);
        out.v[i] = state.v[i] + c * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
    }
    const double m = max_abs(out.u, out.v);
    if (!std::isfinite(m) || m > kBlowupThreshold) {
        throw BlowupError(out.t, -1, m);
    }
    return out;
}

double kink_displacement(double x, double kappa) {
    if (!(kappa > 0.0)) throw std::domain_error("kink_displacement: kappa must be > 0");
    // arctan(y) + arctan(1/y) = pi/2 avoids forming kappa * e^x near overflow
    if (x > 350.0) return kTwoPi - 4.0 * std::atan(std::exp(-x) / kappa);
    return 4.0 * std::atan(kappa * std::exp(x));
}

double breather_displacement(double x, double nu, double kappa) {
    if (!(kappa > 0.0) || !(nu > 0.0)) {
        throw std::domain_error("breather_displacement: nu, kappa must be > 0");
    }
    if (std::fabs(x) > 350.0) return 0.0;  // cosh overflow: profile is ~e^-|x|
    return 4.0 * std::atan(nu / (kappa * std::cosh(x)));
}

ChainState init_kink(const ChainParams& params, const ModelParams&, double kappa) {
    ChainState s;
    s.t = 0.0;
    s.u.resize(params.n_oscillators);
    s.v.assign(params.n_oscillators, 0.0);
    for (std::size_t i = 0; i < params.n_oscillators; ++i) {
        s.u[i] = kink_displacement(params.x(i), kappa);
    }
    return s;
}

ChainState init_breather(const ChainParams& params, const ModelParams&, double nu,
                         double kappa) {
    ChainState s;
    s.t = 0.0;
    s.u.resize(params.n_oscillators);
    s.v.assign(params.n_oscillators, 0.0);
    for (std::size_t i = 0; i < params.n_oscillators; ++i) {
        s.u[i] = breather_displacement(params.x(i), nu, kappa);
    }
    return s;
}

ChainTrajectory simulate_chain(const ChainRunSpec& spec, const ChainState& initial) {
    if (!(spec.dt > 0.0) && spec.t_end > 0.0) {
        throw std::domain_error("simulate_chain: dt must be > 0");
    }
    const CouplingKernel kernel = build_kernel(spec.chain, spec.model.alpha);
    const std::size_t center = (spec.chain.n_oscillators - 1) / 2;
    const long nsteps = (spec.t_end <= 0.0) ? 0 : long(std::llround(spec.t_end / spec.dt));

    ChainTrajectory traj;
    ChainState s = initial;
    s.t = 0.0;
    auto record_snapshot = [&](const ChainState& st) {
        traj.snapshots.push_back({st.t, st.u, st.v});
        traj.energy.emplace_back(st.t, chain_energy(st, spec.model, kernel,
                                                    spec.accelerate));
    };
    record_snapshot(s);
    traj.trace_t.push_back(0.0);
    traj.trace_u_center.push_back(s.u[center]);

    for (long step = 1; step <= nsteps; ++step) {
        try {
            s = rk4_step(s, spec.model, kernel, spec.dt);
        } catch (const BlowupError&) {
            // abort with the last valid snapshot and the diverging step
            traj.blowup_step = step;
            record_snapshot(s);
            return traj;
        }
        s.t = double(step) * spec.dt;  // avoid accumulated-sum drift
        traj.trace_t.push_back(s.t);
        traj.trace_u_center.push_back(s.u[center]);
        if (step % spec.snapshot_every == 0 || step == nsteps) {
            record_snapshot(s);
        }
    }
    return traj;
}

}  // namespace fracto::lattice
