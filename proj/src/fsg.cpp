#include "fracto/fsg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracto::fsg {

namespace {

double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}

void check_blowup(const riesz::GridFunction& u, double t, long step) {
    const double m = max_abs(u.values);
    if (!std::isfinite(m) || m > kBlowupThreshold) throw BlowupError(t, step, m);
}

}  // namespace

FieldParams::FieldParams(lattice::ModelParams m, std::size_t n, double L)
    : model(std::move(m)), n_oscillators(n), half_length(L) {
    if (n < 3 || n % 2 == 0) {
        throw std::domain_error("FieldParams: n_oscillators must be odd and >= 3");
    }
    if (!(L > 0.0)) throw std::domain_error("FieldParams: half_length must be > 0");
}

double FieldParams::jbar0() const {
    const double al = model.alpha.value();
    return model.j0 * std::pow(dx(), std::min(al, 2.0));
}

riesz::RieszOperatorConfig FieldParams::riesz_config() const {
    riesz::RieszOperatorConfig cfg;
    cfg.h = h();
    cfg.half_length = half_length;
    cfg.scheme = scheme;
    cfg.edge_policy = edge_policy;
    cfg.accelerate = accelerate;
    return cfg;
}

riesz::GridFunction FieldParams::make_grid() const {
    riesz::GridFunction g;
    g.h = h();
    const std::size_t n = grid_points();
    g.x0 = -double(n - 1) / 2.0 * g.h;
    g.values.assign(n, 0.0);
    return g;
}

riesz::GridFunction fsg_rhs(const riesz::GridFunction& u, const FieldParams& params) {
    riesz::GridFunction acc =
        riesz::riesz_apply(u, params.riesz_config(), params.model.alpha);
    const double c = params.jbar0() * kernel::a_alpha(params.model.alpha);
    const double j1 = params.model.j1;
    const double j2 = params.model.j2;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc.values[i] = c * acc.values[i] - j1 * u.values[i] -
                        j2 * std::sin(u.values[i]);
    }
    return acc;
}

bool cfl_check(double dt, double dx, const kernel::FractionalOrder& order) {
    if (!(dt > 0.0) || !(dx > 0.0)) {
        throw std::domain_error("cfl_check: dt and dx must be > 0");
    }
    return dt / std::pow(dx, order.value()) < 0.5;
}

void step_central(CentralState& state, const FieldParams& params, double dt) {
    const riesz::GridFunction acc = fsg_rhs(state.u, params);
    riesz::GridFunction next = state.u;
    for (std::size_t i = 0; i < next.size(); ++i) {
        next.values[i] = 2.0 * state.u.values[i] - state.u_prev.values[i] +
                         dt * dt * acc.values[i];
    }
    state.u_prev = std::move(state.u);
    state.u = std::move(next);
    state.t += dt;
    check_blowup(state.u, state.t, -1);
}

void step_rk4_field(FieldState& state, const FieldParams& params, double dt) {
    const std::size_t n = state.u.size();
    auto rhs_of = [&](const riesz::GridFunction& u) { return fsg_rhs(u, params); };
    auto shifted = [&](const riesz::GridFunction& base,
                       const std::vector<double>& d, double c) {
        riesz::GridFunction out = base;
        for (std::size_t i = 0; i < n; ++i) out.values[i] += c * d[i];
        return out;
    };
    // k1
    const riesz::GridFunction a1 = rhs_of(state.u);
    // k2
    riesz::GridFunction u2 = shifted(state.u, state.v.values, 0.5 * dt);
    riesz::GridFunction v2 = shifted(state.v, a1.values, 0.5 * dt);
    const riesz::GridFunction a2 = rhs_of(u2);
    // k3
    riesz::GridFunction u3 = shifted(state.u, v2.values, 0.5 * dt);
    riesz::GridFunction v3 = shifted(state.v, a2.values, 0.5 * dt);
    const riesz::GridFunction a3 = rhs_of(u3);
    // k4
    riesz::GridFunction u4 = shifted(state.u, v3.values, dt);
    riesz::GridFunction v4 = shifted(state.v, a3.values, dt);
    const riesz::GridFunction a4 = rhs_of(u4);

    const double c = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        state.u.values[i] += c * (state.v.values[i] + 2.0 * v2.values[i] +
                                  2.0 * v3.values[i] + v4.values[i]);
        state.v.values[i] += c * (a1.values[i] + 2.0 * a2.values[i] +
                                  2.0 * a3.values[i] + a4.values[i]);
    }
    state.t += dt;
    check_blowup(state.u, state.t, -1);
}

namespace {

// Restrict the state grid to the coarse oscillator grid (every h_ratio-th
// sample; the state grid contains x_n = n dx by construction).
std::vector<double> to_coarse(const riesz::GridFunction& g, int h_ratio) {
    std::vector<double> out;
    out.reserve(g.size() / std::size_t(h_ratio) + 1);
    for (std::size_t i = 0; i < g.size(); i += std::size_t(h_ratio)) {
        out.push_back(g.values[i]);
    }
    return out;
}

}  // namespace

FieldTrajectory simulate_fsg(const FieldRunSpec& spec, const riesz::GridFunction& u0,
                             const riesz::GridFunction* v0) {
    const FieldParams& p = spec.params;
    if (u0.size() != p.grid_points()) {
        throw std::invalid_argument("simulate_fsg: initial field does not match the "
                                    "configured grid");
    }
    if (spec.stepper == TimeStepper::Central && spec.t_end > 0.0 &&
        !cfl_check(spec.dt, p.dx(), p.model.alpha) && !spec.force_cfl) {
        throw std::domain_error(
            "simulate_fsg: dt violates the stability bound dt/dx^alpha < 1/2 for "
            "central differencing (pass force_cfl to override)");
    }
    const long nsteps = (spec.t_end <= 0.0) ? 0 : long(std::llround(spec.t_end / spec.dt));
    const std::size_t center = (u0.size() - 1) / 2;
    const double dt = spec.dt;

    FieldTrajectory traj;
    riesz::GridFunction v_init = p.make_grid();
    if (v0) v_init = *v0;

    auto push_snapshot = [&](double t, const riesz::GridFunction& u,
                             const riesz::GridFunction& v) {
        traj.snapshots.push_back({t, to_coarse(u, p.h_ratio), to_coarse(v, p.h_ratio)});
    };
    push_snapshot(0.0, u0, v_init);
    traj.trace_t.push_back(0.0);
    traj.trace_u_center.push_back(u0.values[center]);
    traj.final_u = u0;

    if (spec.stepper == TimeStepper::Central) {
        CentralState st;
        st.t = 0.0;
        st.u = u0;
        // Taylor half-start: u(-dt) = u0 - dt v0 + dt^2/2 rhs(u0), so the first
        // central step reproduces u(dt) to second order.
        const riesz::GridFunction a0 = fsg_rhs(u0, p);
        st.u_prev = u0;
        for (std::size_t i = 0; i < u0.size(); ++i) {
            st.u_prev.values[i] =
                u0.values[i] - dt * v_init.values[i] + 0.5 * dt * dt * a0.values[i];
        }
        for (long step = 1; step <= nsteps; ++step) {
            try {
                step_central(st, p, dt);
            } catch (const BlowupError&) {
                traj.blowup_step = step;
                break;
            }
            st.t = double(step) * dt;
            traj.trace_t.push_back(st.t);
            traj.trace_u_center.push_back(st.u.values[center]);
            if (step % spec.snapshot_every == 0 || step == nsteps) {
                // v from the backward pair, second-order one-sided
                riesz::GridFunction v = st.u;
                const riesz::GridFunction a = fsg_rhs(st.u, p);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v.values[i] = (st.u.values[i] - st.u_prev.values[i]) / dt +
                                  0.5 * dt * a.values[i];
                }
                push_snapshot(st.t, st.u, v);
                traj.final_u = st.u;
            }
        }
        if (!traj.blowup_step) traj.final_u = st.u;
        return traj;
    }

    FieldState st;
    st.t = 0.0;
    st.u = u0;
    st.v = v_init;
    for (long step = 1; step <= nsteps; ++step) {
        try {
            step_rk4_field(st, p, dt);
        } catch (const BlowupError&) {
            traj.blowup_step = step;
            break;
        }
        st.t = double(step) * dt;
        traj.trace_t.push_back(st.t);
        traj.trace_u_center.push_back(st.u.values[center]);
        if (step % spec.snapshot_every == 0 || step == nsteps) {
            push_snapshot(st.t, st.u, st.v);
            traj.final_u = st.u;
        }
    }
    if (!traj.blowup_step) traj.final_u = st.u;
    return traj;
}

}  // namespace fracto::fsg
