#include "fracto/output.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fracto/svg.hpp"

namespace fracto::output {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_time(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", t);
    return buf;
}

std::string fmt_alpha(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

void write_snapshot_csv(const fs::path& path, const char* index_header,
                        double x0, double dx, const std::vector<double>& u,
                        const std::vector<double>& v, long index_offset) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f << index_header << ",x,u,v\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        f << (long(i) + index_offset) << "," << fmt17(x0 + double(i) * dx) << ","
          << fmt17(u[i]) << "," << fmt17(v[i]) << "\n";
    }
}

void write_trace_csv(const fs::path& path, const std::vector<double>& t,
                     const std::vector<double>& u) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f << "t,u_center\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        f << fmt17(t[i]) << "," << fmt17(u[i]) << "\n";
    }
}

ordered_json config_json(const run::RunConfig& cfg, double alpha,
                         double resolved_fsg_dt) {
    ordered_json j;
    j["scenario"] = cfg.scenario;
    j["system"] = cfg.system == run::SystemChoice::Lattice
                      ? "lattice"
                      : cfg.system == run::SystemChoice::Fsg ? "fsg" : "both";
    j["alpha"] = alpha;
    j["t_end"] = cfg.t_end;
    j["model"] = {{"j0", cfg.j0}, {"j1", cfg.j1}, {"j2", cfg.j2}};
    j["chain"] = {{"n_oscillators", cfg.n_oscillators},
                  {"half_length", cfg.half_length},
                  {"boundary", cfg.boundary == lattice::Boundary::KinkShift
                                   ? "kink_shift"
                                   : "periodic"},
                  {"dx", 2.0 * cfg.half_length / double(cfg.n_oscillators)}};
    ordered_json ic;
    ic["kappa"] = cfg.kappa;
    if (cfg.nu) ic["nu"] = *cfg.nu;
    j["ic"] = ic;
    const char* scheme = "gl";
    if (cfg.scheme == riesz::Scheme::GLShifted) scheme = "gl_shifted";
    else if (cfg.scheme == riesz::Scheme::IntegralB) scheme = "integral_b";
    else if (cfg.scheme == riesz::Scheme::SpectralOracle) scheme = "spectral_oracle";
    j["solver"] = {{"time_stepper",
                    cfg.time_stepper == fsg::TimeStepper::Rk4 ? "rk4" : "central"},
                   {"scheme", scheme},
                   {"chain_dt", cfg.chain_dt},
                   {"fsg_dt", resolved_fsg_dt},
                   {"h_ratio", cfg.h_ratio},
                   {"force_cfl", cfg.force_cfl}};
    j["output"] = {{"dir", cfg.out_dir},
                   {"snapshot_every", cfg.snapshot_every},
                   {"render", cfg.render}};
    return j;
}

lattice::ChainState initial_chain_state(const analysis::Scenario& sc,
                                        const lattice::ChainParams& chain,
                                        const lattice::ModelParams& model) {
    return sc.kind == analysis::ScenarioKind::Kink
               ? lattice::init_kink(chain, model, sc.kappa)
               : lattice::init_breather(chain, model, sc.nu.value_or(1.0), sc.kappa);
}

riesz::GridFunction initial_field(const analysis::Scenario& sc,
                                  const fsg::FieldParams& fp) {
    riesz::GridFunction u0 = fp.make_grid();
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const double x = u0.x(i);
        u0.values[i] =
            sc.kind == analysis::ScenarioKind::Kink
                ? lattice::kink_displacement(x, sc.kappa)
                : lattice::breather_displacement(x, sc.nu.value_or(1.0), sc.kappa);
    }
    return u0;
}

}  // namespace

fs::path resolve_out_root(const run::RunConfig& cfg) {
    if (const char* env = std::getenv("FRACTO_OUT")) {
        if (*env) return fs::path(env);
    }
    return fs::path(cfg.out_dir);
}

fs::path run_dir(const fs::path& root, const std::string& scenario, double alpha) {
    return root / scenario / fmt_alpha(alpha);
}

RunSummary run_simulate(const run::RunConfig& cfg) {
    RunSummary summary;
    const analysis::Scenario sc = cfg.to_scenario();
    const fs::path root = resolve_out_root(cfg);
    for (double alpha : cfg.alphas) {
        const fs::path dir = run_dir(root, cfg.scenario, alpha);
        fs::create_directories(dir);
        summary.run_dirs.push_back(dir);

        const kernel::FractionalOrder order(alpha);
        const lattice::ModelParams model(order, sc.j0, sc.j1, sc.j2);
        const lattice::ChainParams chain(sc.n_oscillators, sc.half_length, sc.boundary);
        const double dx = chain.dx();
        const double fsg_dt = cfg.fsg_dt.value_or(
            analysis::default_fsg_dt(cfg.time_stepper, dx, alpha));

        std::ofstream sidecar(dir / "run.jsonl", std::ios::binary);
        sidecar << config_json(cfg, alpha, fsg_dt).dump() << "\n";

        const lattice::ChainTrajectory* chain_traj_ptr = nullptr;
        const fsg::FieldTrajectory* field_traj_ptr = nullptr;
        lattice::ChainTrajectory chain_traj;
        fsg::FieldTrajectory field_traj;

        if (cfg.system != run::SystemChoice::Fsg) {
            const long every =
                std::max(1L, long(std::llround(cfg.snapshot_every / cfg.chain_dt)));
            lattice::ChainRunSpec spec{chain, model, cfg.chain_dt, cfg.t_end, every,
                                       true};
            chain_traj = lattice::simulate_chain(spec, initial_chain_state(sc, chain, model));
            for (const auto& snap : chain_traj.snapshots) {
                write_snapshot_csv(dir / ("chain_t" + fmt_time(snap.t) + ".csv"), "n",
                                   chain.x(0), dx, snap.u, snap.v,
                                   -long(chain.n_oscillators - 1) / 2);
            }
            write_trace_csv(dir / "chain_trace.csv", chain_traj.trace_t,
                            chain_traj.trace_u_center);
            for (const auto& [t, H] : chain_traj.energy) {
                ordered_json e;
                e["t"] = t;
                e["H"] = H;
                sidecar << e.dump() << "\n";
            }
            if (chain_traj.blowup_step) {
                ordered_json b;
                b["blowup"] = {{"system", "lattice"}, {"step", *chain_traj.blowup_step}};
                sidecar << b.dump() << "\n";
                summary.any_blowup = true;
            }
            chain_traj_ptr = &chain_traj;
        }

        if (cfg.system != run::SystemChoice::Lattice) {
            fsg::FieldParams fp(model, sc.n_oscillators, sc.half_length);
            fp.h_ratio = cfg.h_ratio;
            fp.scheme = cfg.scheme;
            fp.edge_policy = sc.kind == analysis::ScenarioKind::Kink
                                 ? riesz::EdgePolicy::KinkExtension
                                 : riesz::EdgePolicy::PeriodicExtension;
            const long every =
                std::max(1L, long(std::llround(cfg.snapshot_every / fsg_dt)));
            fsg::FieldRunSpec spec{fp, cfg.time_stepper, fsg_dt, cfg.t_end, every,
                                   cfg.force_cfl};
            field_traj = fsg::simulate_fsg(spec, initial_field(sc, fp));
            for (const auto& snap : field_traj.snapshots) {
                write_snapshot_csv(dir / ("fsg_t" + fmt_time(snap.t) + ".csv"), "i",
                                   chain.x(0), dx, snap.u, snap.v,
                                   -long(chain.n_oscillators - 1) / 2);
            }
            write_trace_csv(dir / "fsg_trace.csv", field_traj.trace_t,
                            field_traj.trace_u_center);
            if (field_traj.blowup_step) {
                ordered_json b;
                b["blowup"] = {{"system", "fsg"}, {"step", *field_traj.blowup_step}};
                sidecar << b.dump() << "\n";
                summary.any_blowup = true;
            }
            field_traj_ptr = &field_traj;
        }

        if (cfg.render) {
            render_duality_figure(dir, alpha, chain_traj_ptr, field_traj_ptr, dx);
        }
    }
    return summary;
}

RunSummary run_compare(const run::RunConfig& cfg) {
    RunSummary summary;
    const analysis::Scenario sc = cfg.to_scenario();
    const fs::path root = resolve_out_root(cfg);
    const fs::path scenario_dir = root / cfg.scenario;
    fs::create_directories(scenario_dir);

    ordered_json report;
    report["scenario"] = cfg.scenario;
    report["entries"] = ordered_json::array();
    std::vector<double> tail_alphas;
    std::vector<riesz::GridFunction> tail_snaps;

    for (double alpha : cfg.alphas) {
        const fs::path dir = run_dir(root, cfg.scenario, alpha);
        fs::create_directories(dir);
        summary.run_dirs.push_back(dir);

        analysis::SolverOptions opts = cfg.solver_options();
        opts.chain_snapshot_every =
            std::max(1L, long(std::llround(cfg.snapshot_every / cfg.chain_dt)));
        const double dx = 2.0 * sc.half_length / double(sc.n_oscillators);
        const double fdt = cfg.fsg_dt.value_or(
            analysis::default_fsg_dt(cfg.time_stepper, dx, alpha));
        opts.fsg_snapshot_every =
            std::max(1L, long(std::llround(cfg.snapshot_every / fdt)));

        const analysis::ComparisonReport rep = analysis::run_duality(sc, alpha, opts);
        summary.any_blowup |= rep.lattice_blowup || rep.fsg_blowup;
        if (rep.lattice_blowup || rep.fsg_blowup) summary.comparison_failed = true;

        ordered_json e;
        e["alpha"] = alpha;
        e["center_trace_rmse"] = rep.center_trace_rmse;
        e["center_trace_linf"] = rep.center_trace_linf;
        e["trace_amplitude"] = rep.trace_amplitude;
        e["lattice_blowup"] = rep.lattice_blowup;
        e["fsg_blowup"] = rep.fsg_blowup;
        e["tail_slope"] = rep.tail_slope;
        e["tail_r2"] = rep.tail_r2;
        if (rep.crossover_x) e["crossover_x"] = *rep.crossover_x;
        ordered_json fl = ordered_json::array();
        for (const auto& [t, d] : rep.field_linf_over_time) {
            fl.push_back({{"t", t}, {"linf", d}});
        }
        e["field_linf_over_time"] = fl;
        report["entries"].push_back(e);

        // trace_compare.csv on the coarser cadence
        {
            std::ofstream f(dir / "trace_compare.csv", std::ios::binary);
            f << "t,u_center_lattice,u_center_fsg,abs_diff\n";
            const auto& lt = rep.lattice_trajectory;
            const auto& ft = rep.fsg_trajectory;
            const double dt_l = cfg.chain_dt;
            const double dt_f = fdt;
            const double dt_cmp = std::max(dt_l, dt_f);
            const double t_ov =
                std::min(lt.trace_t.empty() ? 0.0 : lt.trace_t.back(),
                         ft.trace_t.empty() ? 0.0 : ft.trace_t.back());
            auto sample = [](const std::vector<double>& tr, double t, double dt) {
                const double s = t / dt;
                const std::size_t i = std::size_t(std::min(double(tr.size() - 1), s));
                if (i + 1 >= tr.size()) return tr.back();
                const double fr = s - double(i);
                return (1.0 - fr) * tr[i] + fr * tr[i + 1];
            };
            const long n = long(std::floor(t_ov / dt_cmp + 1e-9));
            for (long m = 0; m <= n; ++m) {
                const double t = double(m) * dt_cmp;
                const double a = sample(lt.trace_u_center, t, dt_l);
                const double b = sample(ft.trace_u_center, t, dt_f);
                f << fmt17(t) << "," << fmt17(a) << "," << fmt17(b) << ","
                  << fmt17(std::fabs(b - a)) << "\n";
            }
        }
        if (cfg.render) {
            render_duality_figure(dir, alpha, &rep.lattice_trajectory,
                                  &rep.fsg_trajectory, dx);
        }
        if (!rep.lattice_trajectory.snapshots.empty()) {
            riesz::GridFunction snap;
            snap.h = dx;
            snap.x0 = -double(sc.n_oscillators - 1) / 2.0 * dx;
            snap.values = rep.lattice_trajectory.snapshots.back().u;
            tail_alphas.push_back(alpha);
            tail_snaps.push_back(std::move(snap));
        }
    }

    {
        std::ofstream f(scenario_dir / "report.json", std::ios::binary);
        f << report.dump(2) << "\n";
    }
    if (cfg.render && !tail_snaps.empty()) {
        render_tails_figure(scenario_dir, tail_alphas, tail_snaps);
    }
    return summary;
}

void run_kernel_dump(double alpha, double dx, double k_min, double k_max,
                     int samples, const std::string& out_file) {
    if (samples < 2) throw std::invalid_argument("kernel-dump: samples must be >= 2");
    const kernel::FractionalOrder order(alpha);
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_file);
    f << "k,direct,series,transform_symbol,continuum_symbol\n";
    for (int i = 0; i < samples; ++i) {
        const double k = k_min + (k_max - k_min) * double(i) / double(samples - 1);
        const double direct =
            kernel::coupling_spectrum_direct_refined(order, k, dx, 1000000);
        double series = std::nan("");
        double tsym = std::nan("");
        double csym = std::nan("");
        if (!order.near_integer() && std::fabs(k * dx) < 2.0 * kPi) {
            series = kernel::coupling_spectrum_series(order, k, dx, 40).value;
        }
        if (!order.near_integer() && std::fabs(alpha - 2.0) > 1e-9) {
            tsym = kernel::transform_symbol(order, k, dx);
            csym = kernel::continuum_symbol(order, k);
        }
        f << fmt17(k) << "," << fmt17(direct) << "," << fmt17(series) << ","
          << fmt17(tsym) << "," << fmt17(csym) << "\n";
    }
}

analysis::TailFit run_tail_fit(const std::string& snapshot_csv, double x1, double x2) {
    std::ifstream f(snapshot_csv);
    if (!f) throw std::runtime_error("cannot open " + snapshot_csv);
    std::string line;
    std::getline(f, line);  // header
    std::vector<double> xs, us;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ss, tok, ',')) cols.push_back(std::strtod(tok.c_str(), nullptr));
        if (cols.size() < 3) continue;
        xs.push_back(cols[1]);
        us.push_back(cols[2]);
    }
    if (xs.size() < 2) throw std::runtime_error("snapshot CSV has no samples");
    riesz::GridFunction g;
    g.x0 = xs.front();
    g.h = xs[1] - xs[0];
    g.values = std::move(us);
    return analysis::tail_slope(g, x1, x2);
}

std::vector<DispersionPoint> run_dispersion(const run::RunConfig& cfg, double alpha,
                                            const std::vector<int>& modes) {
    const analysis::Scenario sc = cfg.to_scenario();
    const kernel::FractionalOrder order(alpha);
    const lattice::ModelParams model(order, sc.j0, sc.j1, sc.j2);
    const lattice::ChainParams chain(sc.n_oscillators, sc.half_length, sc.boundary);
    std::vector<DispersionPoint> out;
    for (int m : modes) {
        DispersionPoint p;
        p.k = kPi * double(m) / sc.half_length;
        p.omega_measured = analysis::dispersion_probe(model, chain, p.k);
        const double jk =
            kernel::coupling_spectrum_direct_refined(order, p.k, chain.dx(), 1000000);
        p.omega_predicted = std::sqrt(sc.j1 + sc.j2 + sc.j0 * jk);
        out.push_back(p);
    }
    return out;
}

void dump_weights(const std::string& path, double alpha, std::size_t count) {
    const auto w = riesz::gl_weights(kernel::FractionalOrder(alpha), count);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << "q,w\n";
    for (std::size_t q = 0; q < w.w.size(); ++q) {
        f << q << "," << fmt17(w.w[q]) << "\n";
    }
}

namespace {

svg::Panel field_panel(const std::string& title,
                       const std::vector<lattice::Snapshot>& snaps, double x0,
                       double dx) {
    svg::Panel p;
    p.title = title;
    p.x_label = "x";
    p.y_label = "u";
    const char* colors[] = {"#9ecae1", "#6baed6", "#4292c6", "#2171b5", "#084594"};
    const std::size_t n = snaps.size();
    const std::size_t max_curves = 5;
    const std::size_t stride = n <= max_curves ? 1 : (n - 1) / (max_curves - 1);
    std::size_t ci = 0;
    for (std::size_t i = 0; i < n; i += stride) {
        const auto& s = snaps[i];
        svg::Series ser;
        ser.color = colors[std::min<std::size_t>(ci, 4)];
        ser.x.reserve(s.u.size());
        ser.y = s.u;
        for (std::size_t j = 0; j < s.u.size(); ++j) ser.x.push_back(x0 + double(j) * dx);
        char lab[32];
        std::snprintf(lab, sizeof lab, "t=%.0f", s.t);
        ser.label = lab;
        p.series.push_back(std::move(ser));
        ++ci;
    }
    if (p.series.empty()) p.placeholder = "no data";
    return p;
}

}  // namespace

void render_duality_figure(const fs::path& dir, double alpha,
                           const lattice::ChainTrajectory* chain,
                           const fsg::FieldTrajectory* field, double dx) {
    std::vector<svg::Panel> panels;
    const double x0 = chain && !chain->snapshots.empty()
                          ? -double(chain->snapshots[0].u.size() - 1) / 2.0 * dx
                          : (field && !field->snapshots.empty()
                                 ? -double(field->snapshots[0].u.size() - 1) / 2.0 * dx
                                 : 0.0);
    if (chain) {
        panels.push_back(field_panel("oscillator chain", chain->snapshots, x0, dx));
    } else {
        svg::Panel p;
        p.title = "oscillator chain";
        p.placeholder = "arm not run";
        panels.push_back(p);
    }
    if (field) {
        std::vector<lattice::Snapshot> fs_snaps;
        for (const auto& s : field->snapshots) fs_snaps.push_back({s.t, s.u, s.v});
        panels.push_back(field_panel("fractional sine-Gordon", fs_snaps, x0, dx));
    } else {
        svg::Panel p;
        p.title = "fractional sine-Gordon";
        p.placeholder = "arm not run";
        panels.push_back(p);
    }
    // bottom: center-trace overlay, solid lattice curve + circles on every
    // 20th continuum sample
    svg::Panel tr;
    tr.title = "center displacement";
    tr.x_label = "t";
    tr.y_label = "u(0,t)";
    bool any = false;
    if (chain && !chain->trace_t.empty()) {
        svg::Series s;
        s.x = chain->trace_t;
        s.y = chain->trace_u_center;
        s.color = "#1f4e8c";
        s.label = "chain";
        tr.series.push_back(std::move(s));
        any = true;
    }
    if (field && !field->trace_t.empty()) {
        svg::Series s;
        s.x = field->trace_t;
        s.y = field->trace_u_center;
        s.color = "#c23b22";
        s.circles = true;
        s.circle_every = 20;
        s.label = "field (every 20th)";
        tr.series.push_back(std::move(s));
        any = true;
    }
    if (!any) tr.placeholder = "no data";
    panels.push_back(std::move(tr));

    char name[64];
    std::snprintf(name, sizeof name, "fig_duality_%s.svg", fmt_alpha(alpha).c_str());
    svg::write_figure((dir / name).string(), panels, 2);
}

void render_tails_figure(const fs::path& scenario_dir,
                         const std::vector<double>& alphas,
                         const std::vector<riesz::GridFunction>& snapshots) {
    const char* colors[] = {"#1f4e8c", "#c23b22", "#2e7d32"};
    const svg::LineStyle styles[] = {svg::LineStyle::Solid, svg::LineStyle::Dashed,
                                     svg::LineStyle::Dotted};
    svg::Panel normal, semilog, loglog;
    normal.title = "breather profile, t = 100";
    normal.x_label = "x";
    normal.y_label = "u";
    semilog.title = "semi-logarithmic";
    semilog.x_label = "x";
    semilog.y_label = "|u|";
    semilog.y_scale = svg::AxisScale::Log;
    loglog.title = "double-logarithmic";
    loglog.x_label = "x";
    loglog.y_label = "|u|";
    loglog.x_scale = svg::AxisScale::Log;
    loglog.y_scale = svg::AxisScale::Log;

    double ref_x1 = 0.0, ref_x2 = 0.0;
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
        const auto& g = snapshots[s];
        svg::Series base;
        base.color = colors[s % 3];
        base.style = styles[s % 3];
        char lab[32];
        std::snprintf(lab, sizeof lab, "alpha=%s", fmt_alpha(alphas[s]).c_str());
        base.label = lab;
        svg::Series pos = base;  // x > 0 half, |u|
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = g.x(i);
            base.x.push_back(x);
            base.y.push_back(g.values[i]);
            if (x > 0.0 && std::fabs(g.values[i]) > 1e-14) {
                pos.x.push_back(x);
                pos.y.push_back(std::fabs(g.values[i]));
            }
        }
        if (!pos.x.empty()) {
            ref_x1 = pos.x[pos.x.size() / 4];
            ref_x2 = pos.x.back();
        }
        normal.series.push_back(base);
        semilog.series.push_back(pos);
        loglog.series.push_back(pos);

        // reference power law ~ x^-(1+alpha) anchored at the tail midpoint
        if (!pos.x.empty() && ref_x2 > ref_x1 && ref_x1 > 0.0) {
            const std::size_t mid = pos.x.size() * 5 / 8;
            const double c =
                pos.y[mid] * std::pow(pos.x[mid], 1.0 + alphas[s]);
            svg::Series ref;
            ref.color = "#888888";
            ref.style = svg::LineStyle::Solid;
            for (int i = 0; i <= 40; ++i) {
                const double x = ref_x1 * std::pow(ref_x2 / ref_x1, double(i) / 40.0);
                ref.x.push_back(x);
                ref.y.push_back(c * std::pow(x, -(1.0 + alphas[s])));
            }
            loglog.series.push_back(std::move(ref));
        }
    }
    svg::write_figure((scenario_dir / "fig_tails.svg").string(),
                      {normal, semilog, loglog}, 3);
}

void run_render(const fs::path& dir) {
    // Rebuild figures from the CSVs of a prior run directory.
    std::vector<lattice::Snapshot> chain_snaps, field_snaps;
    lattice::ChainTrajectory chain;
    fsg::FieldTrajectory field;
    double dx = 1.0;
    double x0 = 0.0;
    auto load_snapshot = [&](const fs::path& p, std::vector<lattice::Snapshot>& dst,
                             const std::string& stem) {
        const std::string name = p.filename().string();
        if (name.rfind(stem, 0) != 0 || p.extension() != ".csv") return;
        const std::string tstr = name.substr(stem.size(),
                                             name.size() - stem.size() - 4);
        lattice::Snapshot s;
        s.t = std::strtod(tstr.c_str(), nullptr);
        std::ifstream f(p);
        std::string line;
        std::getline(f, line);
        std::vector<double> xs;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string tok;
            std::vector<double> cols;
            while (std::getline(ss, tok, ',')) {
                cols.push_back(std::strtod(tok.c_str(), nullptr));
            }
            if (cols.size() < 4) continue;
            xs.push_back(cols[1]);
            s.u.push_back(cols[2]);
            s.v.push_back(cols[3]);
        }
        if (xs.size() >= 2) {
            dx = xs[1] - xs[0];
            x0 = xs[0];
        }
        dst.push_back(std::move(s));
    };
    auto load_trace = [&](const fs::path& p, std::vector<double>& t,
                          std::vector<double>& u) {
        std::ifstream f(p);
        if (!f) return;
        std::string line;
        std::getline(f, line);
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) continue;
            t.push_back(std::strtod(line.substr(0, comma).c_str(), nullptr));
            u.push_back(std::strtod(line.substr(comma + 1).c_str(), nullptr));
        }
    };
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        load_snapshot(entry.path(), chain_snaps, "chain_t");
        load_snapshot(entry.path(), field_snaps, "fsg_t");
    }
    std::sort(chain_snaps.begin(), chain_snaps.end(),
              [](const auto& a, const auto& b) { return a.t < b.t; });
    std::sort(field_snaps.begin(), field_snaps.end(),
              [](const auto& a, const auto& b) { return a.t < b.t; });
    chain.snapshots = std::move(chain_snaps);
    for (auto& s : field_snaps) field.snapshots.push_back({s.t, s.u, s.v});
    load_trace(dir / "chain_trace.csv", chain.trace_t, chain.trace_u_center);
    load_trace(dir / "fsg_trace.csv", field.trace_t, field.trace_u_center);
    (void)x0;

    const double alpha = std::strtod(dir.filename().string().c_str(), nullptr);
    render_duality_figure(dir, alpha > 0.0 ? alpha : 0.0,
                          chain.snapshots.empty() && chain.trace_t.empty() ? nullptr
                                                                           : &chain,
                          field.snapshots.empty() && field.trace_t.empty() ? nullptr
                                                                           : &field,
                          dx);
}

}  // namespace fracto::output
