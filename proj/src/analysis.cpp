#include "fracto/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracto::analysis {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct AffineFit {
    double slope = 0.0, intercept = 0.0, ss_res = 0.0, ss_tot = 0.0;
};

AffineFit fit_affine(const std::vector<double>& t, const std::vector<double>& y,
                     std::size_t lo, std::size_t hi /* exclusive */) {
    AffineFit f;
    const double n = double(hi - lo);
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double det = n * stt - st * st;
    f.slope = (n * sty - st * sy) / det;
    f.intercept = (sy - f.slope * st) / n;
    const double mean = sy / n;
    for (std::size_t i = lo; i < hi; ++i) {
        const double r = y[i] - (f.slope * t[i] + f.intercept);
        f.ss_res += r * r;
        const double d = y[i] - mean;
        f.ss_tot += d * d;
    }
    return f;
}

}  // namespace

Scenario kink_scenario() {
    Scenario s;
    s.kind = ScenarioKind::Kink;
    s.j0 = 0.01;
    s.j1 = 0.2;
    s.j2 = 0.01;
    s.n_oscillators = 1001;
    s.half_length = 500.0;
    s.boundary = lattice::Boundary::KinkShift;
    s.kappa = 0.001;
    s.t_end = 100.0;
    s.alphas = {1.21};
    return s;
}

Scenario breather_scenario() {
    Scenario s;
    s.kind = ScenarioKind::Breather;
    s.j0 = 0.01;
    s.j1 = 0.1;
    s.j2 = 0.1;
    s.n_oscillators = 1001;
    s.half_length = 500.0;
    s.boundary = lattice::Boundary::Periodic;
    s.kappa = 0.05;
    s.nu = 1.0;
    s.t_end = 100.0;
    s.alphas = {1.21, 1.51, 1.91};
    return s;
}

TailFit tail_slope(const riesz::GridFunction& snapshot, double x1, double x2) {
    if (!(x1 > 0.0) || !(x2 > x1)) {
        throw std::invalid_argument("tail_slope: window must satisfy 0 < x1 < x2");
    }
    std::vector<double> lx, lu;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
        const double x = snapshot.x(i);
        const double u = snapshot.values[i];
        if (x >= x1 && x <= x2 && std::fabs(u) > 1e-14) {
            lx.push_back(std::log(x));
            lu.push_back(std::log(std::fabs(u)));
        }
    }
    if (lx.size() < 10) {
        throw std::invalid_argument("tail_slope: degenerate window (< 10 samples)");
    }
    const AffineFit f = fit_affine(lx, lu, 0, lx.size());
    return {f.slope, f.ss_tot > 0.0 ? 1.0 - f.ss_res / f.ss_tot : 1.0};
}

double crossover_locate(const riesz::GridFunction& snapshot, double x_min,
                        double x_max) {
    std::vector<double> xs, lxs, lu;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
        const double x = snapshot.x(i);
        const double u = snapshot.values[i];
        if (x >= x_min && x <= x_max && x > 0.0 && std::fabs(u) > 1e-14) {
            xs.push_back(x);
            lxs.push_back(std::log(x));
            lu.push_back(std::log(std::fabs(u)));
        }
    }
    const std::size_t n = xs.size();
    if (n < 24) {
        throw std::invalid_argument("crossover_locate: too few tail samples");
    }
    double best = std::numeric_limits<double>::infinity();
    double best_x = xs.front();
    for (std::size_t i = 10; i + 10 < n; ++i) {
        const double ss = fit_affine(xs, lu, 0, i).ss_res +
                          fit_affine(lxs, lu, i, n).ss_res;
        if (ss < best) {
            best = ss;
            best_x = xs[i];
        }
    }
    const double single = std::min(fit_affine(xs, lu, 0, n).ss_res,
                                   fit_affine(lxs, lu, 0, n).ss_res);
    if (!(best < 0.95 * single)) {
        throw ComparisonFailure(
            "crossover_locate: no crossover (two-segment fit improves the "
            "single-segment residual by < 5%)");
    }
    return best_x;
}

double default_fsg_dt(fsg::TimeStepper stepper, double dx, double alpha) {
    if (stepper == fsg::TimeStepper::Rk4) return 0.01;
    return std::min(0.01, 0.45 * std::pow(dx, alpha));
}

ComparisonReport run_duality(const Scenario& scenario, double alpha,
                             const SolverOptions& opts) {
    ComparisonReport rep;
    rep.alpha = alpha;
    const kernel::FractionalOrder order(alpha);
    const lattice::ModelParams model(order, scenario.j0, scenario.j1, scenario.j2);
    const lattice::ChainParams chain(scenario.n_oscillators, scenario.half_length,
                                     scenario.boundary);

    lattice::ChainState chain0 =
        scenario.kind == ScenarioKind::Kink
            ? lattice::init_kink(chain, model, scenario.kappa)
            : lattice::init_breather(chain, model, scenario.nu.value_or(1.0),
                                     scenario.kappa);

    lattice::ChainRunSpec cspec{chain, model, opts.chain_dt, scenario.t_end,
                                opts.chain_snapshot_every, opts.accelerate};
    rep.lattice_trajectory = lattice::simulate_chain(cspec, chain0);
    rep.lattice_blowup = rep.lattice_trajectory.blowup_step.has_value();

    fsg::FieldParams fp(model, scenario.n_oscillators, scenario.half_length);
    fp.h_ratio = opts.h_ratio;
    fp.scheme = opts.scheme;
    fp.edge_policy = scenario.kind == ScenarioKind::Kink
                         ? riesz::EdgePolicy::KinkExtension
                         : riesz::EdgePolicy::PeriodicExtension;
    fp.accelerate = opts.accelerate;
    riesz::GridFunction u0 = fp.make_grid();
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const double x = u0.x(i);
        u0.values[i] = scenario.kind == ScenarioKind::Kink
                           ? lattice::kink_displacement(x, scenario.kappa)
                           : lattice::breather_displacement(
                                 x, scenario.nu.value_or(1.0), scenario.kappa);
    }
    fsg::FieldRunSpec fspec{fp, opts.stepper,
                            opts.fsg_dt.value_or(
                                default_fsg_dt(opts.stepper, fp.dx(), alpha)),
                            scenario.t_end, opts.fsg_snapshot_every, opts.force_cfl};
    rep.fsg_trajectory = fsg::simulate_fsg(fspec, u0);
    rep.fsg_blowup = rep.fsg_trajectory.blowup_step.has_value();

    // Center traces, compared on the coarser cadence over the overlap window.
    const auto& lt = rep.lattice_trajectory;
    const auto& ft = rep.fsg_trajectory;
    const double dt_l = opts.chain_dt;
    const double dt_f = fspec.dt;
    const double dt_cmp = std::max(dt_l, dt_f);
    const double t_overlap = std::min(lt.trace_t.empty() ? 0.0 : lt.trace_t.back(),
                                      ft.trace_t.empty() ? 0.0 : ft.trace_t.back());
    double mn = std::numeric_limits<double>::infinity(), mx = -mn;
    double sum2 = 0.0, linf = 0.0;
    long count = 0;
    auto sample = [](const std::vector<double>& tr, double t, double dt) {
        // linear interpolation on the uniform trace
        const double s = t / dt;
        const std::size_t i = std::size_t(std::min(double(tr.size() - 1), s));
        if (i + 1 >= tr.size()) return tr.back();
        const double f = s - double(i);
        return (1.0 - f) * tr[i] + f * tr[i + 1];
    };
    const long ncmp = long(std::floor(t_overlap / dt_cmp + 1e-9));
    for (long m = 0; m <= ncmp; ++m) {
        const double t = double(m) * dt_cmp;
        const double a = sample(lt.trace_u_center, t, dt_l);
        const double b = sample(ft.trace_u_center, t, dt_f);
        mn = std::min(mn, a);
        mx = std::max(mx, a);
        const double d = b - a;
        sum2 += d * d;
        linf = std::max(linf, std::fabs(d));
        ++count;
    }
    rep.center_trace_rmse = count > 0 ? std::sqrt(sum2 / double(count)) : 0.0;
    rep.center_trace_linf = linf;
    rep.trace_amplitude = count > 0 ? 0.5 * (mx - mn) : 0.0;

    // Field L-inf on the oscillator grid at matching snapshot times.
    for (const auto& fs : ft.snapshots) {
        const lattice::Snapshot* match = nullptr;
        for (const auto& ls : lt.snapshots) {
            if (std::fabs(ls.t - fs.t) < 1e-9 * std::max(1.0, fs.t)) {
                match = &ls;
                break;
            }
        }
        if (!match || match->u.size() != fs.u.size()) continue;
        double d = 0.0;
        for (std::size_t i = 0; i < fs.u.size(); ++i) {
            d = std::max(d, std::fabs(fs.u[i] - match->u[i]));
        }
        rep.field_linf_over_time.emplace_back(fs.t, d);
    }

    // Tail diagnostics of the final lattice snapshot.
    if (!lt.snapshots.empty()) {
        const auto& last = lt.snapshots.back();
        riesz::GridFunction snap;
        snap.h = chain.dx();
        snap.x0 = chain.x(0);
        snap.values = last.u;
        const double L = scenario.half_length;
        try {
            const TailFit tf = tail_slope(snap, 0.2 * L, 0.8 * L);
            rep.tail_slope = tf.slope;
            rep.tail_r2 = tf.r2;
        } catch (const std::invalid_argument&) {
            rep.tail_slope = 0.0;
            rep.tail_r2 = 0.0;
        }
        try {
            rep.crossover_x = crossover_locate(snap, 2.0 * chain.dx(), 0.8 * L);
        } catch (const std::exception&) {
            rep.crossover_x.reset();
        }
    }
    return rep;
}

double dispersion_probe(const lattice::ModelParams& model,
                        const lattice::ChainParams& chain, double k) {
    const double L = chain.half_length;
    const double mods = k * L / kPi;
    if (std::fabs(mods - std::llround(mods)) > 1e-9 * std::max(1.0, std::fabs(mods))) {
        throw std::domain_error("dispersion_probe: k must be a multiple of pi/L");
    }
    // sin u -> u linearization == moving J2 into the linear stiffness
    const lattice::ModelParams lin(model.alpha, model.j0, model.j1 + model.j2, 0.0);
    const lattice::CouplingKernel ker = lattice::build_kernel(chain, model.alpha);
    const std::size_t n = chain.n_oscillators;
    constexpr double eps = 1e-6;
    lattice::ChainState s;
    s.t = 0.0;
    s.u.resize(n);
    s.v.assign(n, 0.0);
    std::vector<double> mode(n);
    for (std::size_t i = 0; i < n; ++i) {
        mode[i] = std::cos(k * chain.x(i));
        s.u[i] = eps * mode[i];
    }
    const double dt = 0.02;
    const double t_end = 140.0;
    const long nsteps = long(std::llround(t_end / dt));
    std::vector<double> amp;
    amp.reserve(std::size_t(nsteps) + 1);
    auto project = [&](const lattice::ChainState& st) {
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) a += st.u[i] * mode[i];
        return 2.0 * a / double(n);
    };
    amp.push_back(project(s));
    for (long step = 1; step <= nsteps; ++step) {
        s = lattice::rk4_step(s, lin, ker, dt);
        amp.push_back(project(s));
    }
    // zero crossings of the mode amplitude
    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < amp.size(); ++i) {
        if ((amp[i] > 0.0 && amp[i + 1] <= 0.0) || (amp[i] < 0.0 && amp[i + 1] >= 0.0)) {
            const double t1 = double(i) * dt;
            crossings.push_back(t1 - amp[i] * dt / (amp[i + 1] - amp[i]));
        }
    }
    if (crossings.size() < 3) {
        throw std::runtime_error("dispersion_probe: too few oscillations observed");
    }
    const double half_period =
        (crossings.back() - crossings.front()) / double(crossings.size() - 1);
    return kPi / half_period;
}

}  // namespace fracto::analysis
