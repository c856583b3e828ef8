// fracto: power-law coupled oscillator chains and their fractional
// sine-Gordon continuum, from one deterministic command line.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical blow-up,
// 4 comparison failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fracto/output.hpp"

namespace {

fracto::run::RunConfig load_config(const std::string& config_file,
                                   const std::string& inline_cfg) {
    std::string text;
    if (!config_file.empty()) {
        std::ifstream f(config_file);
        if (!f) throw fracto::ConfigError("cannot open config file " + config_file);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (!inline_cfg.empty()) text += "\n" + inline_cfg;
    return fracto::run::parse_config(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-law oscillator chains and the fractional sine-Gordon equation"};
    app.require_subcommand(1);

    std::string config_file, inline_cfg, weights_file;
    long weights_count = 1000;

    auto add_config_opts = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_file, "run configuration file");
        cmd->add_option("--set", inline_cfg,
                        "inline configuration, e.g. 'scenario=breather alpha=1.21'");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "run the configured systems");
    add_config_opts(simulate);
    simulate->add_option("--dump-weights", weights_file,
                         "also write the q,w Grunwald-Letnikov table to this file");
    simulate->add_option("--weights-count", weights_count,
                         "entries in the --dump-weights table");

    CLI::App* compare = app.add_subcommand(
        "compare", "run both systems and report duality metrics");
    add_config_opts(compare);

    CLI::App* kdump = app.add_subcommand("kernel-dump",
                                         "tabulate the coupling spectrum and symbols");
    double kd_alpha = 1.21, kd_dx = 1.0, kd_kmin = 0.0, kd_kmax = 3.0;
    int kd_samples = 121;
    std::string kd_out = "kernel.csv";
    kdump->add_option("--alpha", kd_alpha)->required();
    kdump->add_option("--dx", kd_dx)->required();
    kdump->add_option("--k-min", kd_kmin)->required();
    kdump->add_option("--k-max", kd_kmax)->required();
    kdump->add_option("--samples", kd_samples)->required();
    kdump->add_option("--out", kd_out)->required();

    CLI::App* tail = app.add_subcommand("tail-fit",
                                        "log-log tail slope of a snapshot CSV");
    std::string tail_file;
    double tail_x1 = 0.0, tail_x2 = 0.0;
    tail->add_option("--snapshot", tail_file)->required();
    tail->add_option("--x1", tail_x1)->required();
    tail->add_option("--x2", tail_x2)->required();

    CLI::App* disp = app.add_subcommand(
        "dispersion", "measured vs analytic small-amplitude mode frequencies");
    add_config_opts(disp);
    double disp_alpha = 1.21;
    std::vector<int> disp_modes{0, 1, 2, 5, 10};
    disp->add_option("--alpha", disp_alpha);
    disp->add_option("--modes", disp_modes, "mode numbers m (k = pi m / L)");

    CLI::App* render = app.add_subcommand("render",
                                          "regenerate figures from a run directory");
    std::string render_dir;
    render->add_option("dir", render_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const auto cfg = load_config(config_file, inline_cfg);
            if (!weights_file.empty()) {
                fracto::output::dump_weights(weights_file, cfg.alphas.front(),
                                             std::size_t(weights_count));
            }
            const auto summary = fracto::output::run_simulate(cfg);
            for (const auto& d : summary.run_dirs) {
                std::cout << "wrote " << d.string() << "\n";
            }
            if (summary.any_blowup) {
                std::cerr << "numerical blow-up detected; see run.jsonl\n";
                return 3;
            }
        } else if (compare->parsed()) {
            const auto cfg = load_config(config_file, inline_cfg);
            const auto summary = fracto::output::run_compare(cfg);
            for (const auto& d : summary.run_dirs) {
                std::cout << "wrote " << d.string() << "\n";
            }
            if (summary.comparison_failed) {
                std::cerr << "comparison failed: blow-up in at least one arm\n";
                return 4;
            }
            if (summary.any_blowup) return 3;
        } else if (kdump->parsed()) {
            fracto::output::run_kernel_dump(kd_alpha, kd_dx, kd_kmin, kd_kmax,
                                            kd_samples, kd_out);
            std::cout << "wrote " << kd_out << "\n";
        } else if (tail->parsed()) {
            const auto fit = fracto::output::run_tail_fit(tail_file, tail_x1, tail_x2);
            std::printf("slope %.6f  r2 %.6f\n", fit.slope, fit.r2);
        } else if (disp->parsed()) {
            const auto cfg = load_config(config_file, inline_cfg);
            const auto pts = fracto::output::run_dispersion(cfg, disp_alpha, disp_modes);
            std::printf("%-12s %-14s %-14s %s\n", "k", "omega_meas", "omega_pred",
                        "rel_err");
            for (const auto& p : pts) {
                std::printf("%-12.6f %-14.8f %-14.8f %.3e\n", p.k, p.omega_measured,
                            p.omega_predicted,
                            std::fabs(p.omega_measured - p.omega_predicted) /
                                p.omega_predicted);
            }
        } else if (render->parsed()) {
            fracto::output::run_render(render_dir);
            std::cout << "rendered figures in " << render_dir << "\n";
        }
    } catch (const fracto::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fracto::BlowupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fracto::ComparisonFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
