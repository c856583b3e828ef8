#include "fracto/runconfig.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "fracto/errors.hpp"

namespace fracto::run {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'", line);
    }
}

long parse_integer(const std::string& v, int line, const std::string& key) {
    const double d = parse_number(v, line, key);
    if (d != std::floor(d)) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'", line);
    }
    return long(d);
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ConfigError("key '" + key + "': expected true/false, got '" + v + "'", line);
}

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_fractional(double alpha, int line) {
    if (!(alpha > 0.0 && alpha < 4.0)) {
        throw ConfigError("alpha = " + fmt_num(alpha) +
                          " outside the fractional range (0, 4)", line);
    }
    if (std::fabs(alpha - std::round(alpha)) <= 1e-9) {
        throw ConfigError("alpha = " + fmt_num(alpha) +
                          " is an integer; the fractional order must satisfy "
                          "0 < alpha < 4 with alpha not an integer", line);
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool preset_applied = false;
    bool saw_scenario_key = false;
    std::vector<double> alphas;
    std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("unterminated section header", lineno,
                                  int(raw.find('[')) + 1);
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value'", lineno, 1);
        }
        // Two accepted shapes: compact "a=1 b=2" (every whitespace token is a
        // key=value pair) or a single spaced entry "key = value".
        std::vector<std::pair<std::string, std::string>> pairs;
        {
            std::istringstream toks(line);
            std::string tok;
            bool compact = true;
            std::vector<std::string> all;
            while (toks >> tok) {
                all.push_back(tok);
                if (tok.find('=') == std::string::npos ||
                    tok.front() == '=' || tok.back() == '=') {
                    compact = false;
                }
            }
            if (compact && all.size() > 1) {
                for (const auto& t : all) {
                    const auto p = t.find('=');
                    pairs.emplace_back(t.substr(0, p), t.substr(p + 1));
                }
            } else {
                pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
            }
        }
        for (const auto& [key, value] : pairs) {
            if (key.empty()) throw ConfigError("empty key", lineno, 1);
            if (value.empty()) {
                throw ConfigError("key '" + key + "' has no value", lineno, 1);
            }
            const std::string scoped = section.empty() ? key : section + "." + key;
            if (entries.count(scoped)) {
                throw ConfigError("duplicate key '" + scoped + "'", lineno, 1);
            }
            entries[scoped] = {value, lineno};
        }
    }

    auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        auto out = it->second;
        entries.erase(it);
        return out;
    };

    // scenario first: presets provide the defaults the other keys override
    if (auto e = take("scenario")) {
        saw_scenario_key = true;
        cfg.scenario = e->first;
        if (cfg.scenario != "kink" && cfg.scenario != "breather" &&
            cfg.scenario != "custom") {
            throw ConfigError("scenario must be kink, breather or custom", e->second);
        }
    }
    if (cfg.scenario == "kink" || cfg.scenario == "breather") {
        const analysis::Scenario p = cfg.scenario == "kink"
                                         ? analysis::kink_scenario()
                                         : analysis::breather_scenario();
        cfg.j0 = p.j0;
        cfg.j1 = p.j1;
        cfg.j2 = p.j2;
        cfg.n_oscillators = p.n_oscillators;
        cfg.half_length = p.half_length;
        cfg.boundary = p.boundary;
        cfg.kappa = p.kappa;
        cfg.nu = p.nu;
        cfg.t_end = p.t_end;
        cfg.alphas = p.alphas;
        preset_applied = true;
    }
    (void)saw_scenario_key;
    (void)preset_applied;

    if (auto e = take("system")) {
        if (e->first == "lattice") cfg.system = SystemChoice::Lattice;
        else if (e->first == "fsg") cfg.system = SystemChoice::Fsg;
        else if (e->first == "both") cfg.system = SystemChoice::Both;
        else throw ConfigError("system must be lattice, fsg or both", e->second);
    }
    if (auto e = take("alpha")) {
        cfg.alphas.clear();
        std::istringstream as(e->first);
        std::string item;
        while (std::getline(as, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            const double a = parse_number(item, e->second, "alpha");
            require_fractional(a, e->second);
            cfg.alphas.push_back(a);
        }
        if (cfg.alphas.empty()) throw ConfigError("alpha list is empty", e->second);
    }
    if (auto e = take("t_end")) {
        cfg.t_end = parse_number(e->first, e->second, "t_end");
        if (cfg.t_end < 0.0) throw ConfigError("t_end must be >= 0", e->second);
    }

    if (auto e = take("model.j0")) cfg.j0 = parse_number(e->first, e->second, "model.j0");
    if (auto e = take("model.j1")) cfg.j1 = parse_number(e->first, e->second, "model.j1");
    if (auto e = take("model.j2")) cfg.j2 = parse_number(e->first, e->second, "model.j2");

    if (auto e = take("chain.n_oscillators")) {
        const long n = parse_integer(e->first, e->second, "chain.n_oscillators");
        if (n < 3 || n % 2 == 0) {
            throw ConfigError("chain.n_oscillators must be odd and >= 3", e->second);
        }
        cfg.n_oscillators = std::size_t(n);
    }
    if (auto e = take("chain.half_length")) {
        cfg.half_length = parse_number(e->first, e->second, "chain.half_length");
        if (!(cfg.half_length > 0.0)) {
            throw ConfigError("chain.half_length must be > 0", e->second);
        }
    }
    if (auto e = take("chain.boundary")) {
        if (e->first == "kink_shift") cfg.boundary = lattice::Boundary::KinkShift;
        else if (e->first == "periodic") cfg.boundary = lattice::Boundary::Periodic;
        else throw ConfigError("chain.boundary must be kink_shift or periodic", e->second);
    }

    if (auto e = take("ic.kappa")) {
        cfg.kappa = parse_number(e->first, e->second, "ic.kappa");
        if (!(cfg.kappa > 0.0)) throw ConfigError("ic.kappa must be > 0", e->second);
    }
    if (auto e = take("ic.nu")) {
        const double nu = parse_number(e->first, e->second, "ic.nu");
        if (!(nu > 0.0)) throw ConfigError("ic.nu must be > 0", e->second);
        cfg.nu = nu;
    }

    if (auto e = take("solver.time_stepper")) {
        if (e->first == "rk4") cfg.time_stepper = fsg::TimeStepper::Rk4;
        else if (e->first == "central") cfg.time_stepper = fsg::TimeStepper::Central;
        else throw ConfigError("solver.time_stepper must be rk4 or central", e->second);
    }
    if (auto e = take("solver.scheme")) {
        if (e->first == "gl") cfg.scheme = riesz::Scheme::GL;
        else if (e->first == "gl_shifted") cfg.scheme = riesz::Scheme::GLShifted;
        else if (e->first == "integral_b") cfg.scheme = riesz::Scheme::IntegralB;
        else if (e->first == "spectral_oracle") cfg.scheme = riesz::Scheme::SpectralOracle;
        else throw ConfigError("solver.scheme must be gl, gl_shifted, integral_b "
                               "or spectral_oracle", e->second);
    }
    if (auto e = take("solver.chain_dt")) {
        cfg.chain_dt = parse_number(e->first, e->second, "solver.chain_dt");
        if (!(cfg.chain_dt > 0.0)) throw ConfigError("solver.chain_dt must be > 0", e->second);
    }
    if (auto e = take("solver.fsg_dt")) {
        if (e->first != "auto") {
            const double dt = parse_number(e->first, e->second, "solver.fsg_dt");
            if (!(dt > 0.0)) throw ConfigError("solver.fsg_dt must be > 0", e->second);
            cfg.fsg_dt = dt;
        }
    }
    if (auto e = take("solver.h_ratio")) {
        const long r = parse_integer(e->first, e->second, "solver.h_ratio");
        if (r < 1 || r > 16) throw ConfigError("solver.h_ratio must be in [1, 16]", e->second);
        cfg.h_ratio = int(r);
    }
    if (auto e = take("solver.force_cfl")) {
        cfg.force_cfl = parse_bool(e->first, e->second, "solver.force_cfl");
    }

    if (auto e = take("output.dir")) cfg.out_dir = e->first;
    if (auto e = take("output.snapshot_every")) {
        cfg.snapshot_every = parse_number(e->first, e->second, "output.snapshot_every");
        if (!(cfg.snapshot_every > 0.0)) {
            throw ConfigError("output.snapshot_every must be > 0", e->second);
        }
    }
    if (auto e = take("output.render")) {
        cfg.render = parse_bool(e->first, e->second, "output.render");
    }

    if (!entries.empty()) {
        const auto& [key, ve] = *entries.begin();
        throw ConfigError("unknown key '" + key + "'", ve.second);
    }

    if (cfg.scenario == "custom") {
        if (cfg.alphas.empty()) {
            throw ConfigError("custom scenario requires an explicit alpha list");
        }
        if (cfg.j0 < 0 || cfg.j1 < 0 || cfg.j2 < 0) {
            throw ConfigError("model coefficients must be non-negative");
        }
    }
    for (double a : cfg.alphas) require_fractional(a, 0);
    return cfg;
}

std::string render_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "scenario = " << cfg.scenario << "\n";
    out << "system = "
        << (cfg.system == SystemChoice::Lattice
                ? "lattice"
                : cfg.system == SystemChoice::Fsg ? "fsg" : "both")
        << "\n";
    out << "alpha = ";
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
        if (i) out << ", ";
        out << fmt_num(cfg.alphas[i]);
    }
    out << "\n";
    out << "t_end = " << fmt_num(cfg.t_end) << "\n\n";
    out << "[model]\n";
    out << "j0 = " << fmt_num(cfg.j0) << "\n";
    out << "j1 = " << fmt_num(cfg.j1) << "\n";
    out << "j2 = " << fmt_num(cfg.j2) << "\n\n";
    out << "[chain]\n";
    out << "n_oscillators = " << cfg.n_oscillators << "\n";
    out << "half_length = " << fmt_num(cfg.half_length) << "\n";
    out << "boundary = "
        << (cfg.boundary == lattice::Boundary::KinkShift ? "kink_shift" : "periodic")
        << "\n\n";
    out << "[ic]\n";
    out << "kappa = " << fmt_num(cfg.kappa) << "\n";
    if (cfg.nu) out << "nu = " << fmt_num(*cfg.nu) << "\n";
    out << "\n[solver]\n";
    out << "time_stepper = "
        << (cfg.time_stepper == fsg::TimeStepper::Rk4 ? "rk4" : "central") << "\n";
    const char* scheme = "gl";
    if (cfg.scheme == riesz::Scheme::GLShifted) scheme = "gl_shifted";
    else if (cfg.scheme == riesz::Scheme::IntegralB) scheme = "integral_b";
    else if (cfg.scheme == riesz::Scheme::SpectralOracle) scheme = "spectral_oracle";
    out << "scheme = " << scheme << "\n";
    out << "chain_dt = " << fmt_num(cfg.chain_dt) << "\n";
    out << "fsg_dt = " << (cfg.fsg_dt ? fmt_num(*cfg.fsg_dt) : std::string("auto"))
        << "\n";
    out << "h_ratio = " << cfg.h_ratio << "\n";
    out << "force_cfl = " << (cfg.force_cfl ? "true" : "false") << "\n\n";
    out << "[output]\n";
    out << "dir = " << cfg.out_dir << "\n";
    out << "snapshot_every = " << fmt_num(cfg.snapshot_every) << "\n";
    out << "render = " << (cfg.render ? "true" : "false") << "\n";
    return out.str();
}

analysis::Scenario RunConfig::to_scenario() const {
    analysis::Scenario s;
    s.kind = scenario == "kink" ? analysis::ScenarioKind::Kink
                                : analysis::ScenarioKind::Breather;
    if (scenario == "custom") {
        s.kind = nu.has_value() ? analysis::ScenarioKind::Breather
                                : analysis::ScenarioKind::Kink;
    }
    s.j0 = j0;
    s.j1 = j1;
    s.j2 = j2;
    s.n_oscillators = n_oscillators;
    s.half_length = half_length;
    s.boundary = boundary;
    s.kappa = kappa;
    s.nu = nu;
    s.t_end = t_end;
    s.alphas = alphas;
    return s;
}

analysis::SolverOptions RunConfig::solver_options() const {
    analysis::SolverOptions o;
    o.stepper = time_stepper;
    o.scheme = scheme;
    o.chain_dt = chain_dt;
    o.fsg_dt = fsg_dt;
    o.h_ratio = h_ratio;
    o.force_cfl = force_cfl;
    return o;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.scenario == b.scenario && a.system == b.system && a.alphas == b.alphas &&
           a.t_end == b.t_end && a.j0 == b.j0 && a.j1 == b.j1 && a.j2 == b.j2 &&
           a.n_oscillators == b.n_oscillators && a.half_length == b.half_length &&
           a.boundary == b.boundary && a.kappa == b.kappa && a.nu == b.nu &&
           a.time_stepper == b.time_stepper && a.scheme == b.scheme &&
           a.chain_dt == b.chain_dt && a.fsg_dt == b.fsg_dt &&
           a.h_ratio == b.h_ratio && a.force_cfl == b.force_cfl &&
           a.out_dir == b.out_dir && a.snapshot_every == b.snapshot_every &&
           a.render == b.render;
}

}  // namespace fracto::run
