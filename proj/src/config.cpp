#include "pdc/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pdc/errors.hpp"
#include "pdc/io.hpp"

namespace pdc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const double v = std::stod(value, &idx);
        if (idx != value.size()) throw std::invalid_argument(value);
        if (!std::isfinite(v)) throw ConfigError(key + " must be finite, got " + value);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(key + " expects a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const int v = std::stoi(value, &idx);
        if (idx != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + " expects an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key + " expects true or false, got '" + value + "'");
}

GridMode parse_grid_mode(const std::string& value) {
    if (value == "diagonal") return GridMode::Diagonal;
    if (value == "antidiagonal") return GridMode::Antidiagonal;
    if (value == "full") return GridMode::Full;
    throw ConfigError("grid_mode expects diagonal, antidiagonal or full, got '" + value + "'");
}

const char* grid_mode_name(GridMode m) {
    switch (m) {
        case GridMode::Diagonal: return "diagonal";
        case GridMode::Antidiagonal: return "antidiagonal";
        case GridMode::Full: return "full";
    }
    return "diagonal";
}

SweepAxis parse_sweep_axis(const std::string& value) {
    if (value == "none") return SweepAxis::None;
    if (value == "gain") return SweepAxis::Gain;
    if (value == "bandwidth") return SweepAxis::Bandwidth;
    if (value == "injection") return SweepAxis::Injection;
    throw ConfigError("sweep_axis expects none, gain, bandwidth or injection, got '" +
                      value + "'");
}

const char* sweep_axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::None: return "none";
        case SweepAxis::Gain: return "gain";
        case SweepAxis::Bandwidth: return "bandwidth";
        case SweepAxis::Injection: return "injection";
    }
    return "none";
}

CrystalType parse_crystal_type(const std::string& value) {
    if (value == "type1" || value == "1") return CrystalType::TypeI;
    if (value == "type2" || value == "2") return CrystalType::TypeII;
    throw ConfigError("crystal_type expects type1 or type2, got '" + value + "'");
}

} // namespace

void apply_config_key(RunConfig& cfg, const std::string& raw_key, const std::string& value) {
    std::string key = raw_key;
    if (key.rfind("config.", 0) == 0) key = key.substr(7);
    if (key.rfind("checksum.", 0) == 0 || key.rfind("effective.", 0) == 0 ||
        key.rfind("info.", 0) == 0)
        return;

    if (key == "scenario") cfg.scenario = value;
    else if (key == "panel") cfg.panel = value;
    else if (key == "observable") cfg.observable = value;
    else if (key == "rho") cfg.geom.rho = parse_double(key, value);
    else if (key == "gain") cfg.params.g = parse_double(key, value);
    else if (key == "delta0") cfg.params.delta0 = parse_double(key, value);
    else if (key == "q0_norm") cfg.params.q0_norm = parse_double(key, value);
    else if (key == "crystal_type") cfg.params.crystal_type = parse_crystal_type(value);
    else if (key == "amplitude_sq") cfg.input.amplitude_sq = parse_double(key, value);
    else if (key == "q_inject") cfg.input.q_inject = parse_double(key, value);
    else if (key == "c_omega") cfg.c_omega = parse_double(key, value);
    else if (key == "x_min") cfg.x_min = parse_double(key, value);
    else if (key == "x_max") cfg.x_max = parse_double(key, value);
    else if (key == "x_points") cfg.x_points = parse_int(key, value);
    else if (key == "grid_mode") cfg.grid_mode = parse_grid_mode(value);
    else if (key == "sweep_axis") cfg.sweep_axis = parse_sweep_axis(value);
    else if (key == "sweep_min") cfg.sweep_min = parse_double(key, value);
    else if (key == "sweep_max") cfg.sweep_max = parse_double(key, value);
    else if (key == "sweep_points") cfg.sweep_points = parse_int(key, value);
    else if (key == "sweep_log") cfg.sweep_log = parse_bool(key, value);
    else if (key == "q_halfwidth") cfg.q_halfwidth = parse_double(key, value);
    else if (key == "q_points") cfg.q_points = parse_int(key, value);
    else if (key == "w_halfwidth") cfg.w_halfwidth = parse_double(key, value);
    else if (key == "w_points") cfg.w_points = parse_int(key, value);
    else if (key == "rel_tol") cfg.rel_tol = parse_double(key, value);
    else if (key == "threads") {
        const int t = parse_int(key, value);
        if (t < 0) throw ConfigError("threads must be >= 0");
        cfg.threads = static_cast<unsigned>(t);
    } else if (key == "out_dir") cfg.out_dir = value;
    else throw ConfigError("unknown config key '" + raw_key + "'");
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        apply_config_key(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    apply_config_text(cfg, text);
    return cfg;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    apply_config_text(cfg, buf.str());
}

RunConfig load_config_file(const std::string& path) {
    RunConfig cfg;
    apply_config_file(cfg, path);
    return cfg;
}

void validate_config(const RunConfig& cfg) {
    const bool fig = cfg.scenario.rfind("fig", 0) == 0;
    if (cfg.scenario != "g2" && cfg.scenario != "visibility" && cfg.scenario != "sweep" &&
        cfg.scenario != "fig2" && cfg.scenario != "fig3" && cfg.scenario != "fig4" &&
        cfg.scenario != "fig5" && cfg.scenario != "fig6")
        throw ConfigError("unknown scenario '" + cfg.scenario + "'");

    if (!cfg.panel.empty()) {
        const std::string allowed = cfg.scenario == "fig3"   ? "abc"
                                    : cfg.scenario == "fig4" ? "abcd"
                                    : cfg.scenario == "fig5" ? "ab"
                                    : cfg.scenario == "fig6" ? "abcd"
                                                             : "";
        const bool custom = cfg.scenario == "fig3" && cfg.panel == "custom";
        if (!custom &&
            (allowed.empty() || cfg.panel.size() != 1 ||
             allowed.find(cfg.panel[0]) == std::string::npos))
            throw ConfigError("panel '" + cfg.panel + "' is not valid for scenario " +
                              cfg.scenario);
    }
    if (cfg.observable != "g2" && cfg.observable != "g1")
        throw ConfigError("observable expects g2 or g1, got '" + cfg.observable + "'");

    if (!(cfg.geom.rho > 0.0 && cfg.geom.rho < 1.0))
        throw ConfigError("rho must lie in (0, 1)");
    if (cfg.params.g < 0.0) throw ConfigError("gain must be >= 0");
    if (!(cfg.params.q0_norm > 0.0)) throw ConfigError("q0_norm must be > 0");
    if (cfg.input.amplitude_sq < 0.0) throw ConfigError("amplitude_sq must be >= 0");
    if (!(cfg.c_omega > 0.0)) throw ConfigError("c_omega must be > 0");

    if (!(cfg.x_max > cfg.x_min)) throw ConfigError("x_max must exceed x_min");
    if (cfg.x_points < 2) throw ConfigError("x_points must be >= 2");

    if (cfg.sweep_axis != SweepAxis::None || fig) {
        // Figure scenarios fill their own sweep; a custom sweep must be sane.
        if (cfg.sweep_axis != SweepAxis::None) {
            if (cfg.sweep_points < 2) throw ConfigError("sweep_points must be >= 2");
            if (!(cfg.sweep_max > cfg.sweep_min))
                throw ConfigError("sweep_max must exceed sweep_min");
            if (cfg.sweep_log && !(cfg.sweep_min > 0.0))
                throw ConfigError("a log sweep needs sweep_min > 0");
        }
    }
    if (cfg.scenario == "sweep" && cfg.sweep_axis == SweepAxis::None)
        throw ConfigError("scenario sweep needs an explicit sweep_axis");

    if (cfg.q_halfwidth && !(*cfg.q_halfwidth > 0.0))
        throw ConfigError("q_halfwidth must be > 0");
    if (cfg.w_halfwidth && !(*cfg.w_halfwidth > 0.0))
        throw ConfigError("w_halfwidth must be > 0");
    if (cfg.q_points && (*cfg.q_points < 64 || *cfg.q_points % 2 != 0))
        throw ConfigError("q_points must be even and >= 64");
    if (cfg.w_points && (*cfg.w_points < 64 || *cfg.w_points % 2 != 0))
        throw ConfigError("w_points must be even and >= 64");
    if (cfg.rel_tol && !(*cfg.rel_tol > 0.0 && *cfg.rel_tol < 1.0))
        throw ConfigError("rel_tol must lie in (0, 1)");
}

QuadratureSpec resolve_quadrature(const RunConfig& cfg) {
    QuadratureSpec spec = default_quadrature(cfg.params, cfg.geom);
    if (cfg.q_halfwidth) spec.q_halfwidth = *cfg.q_halfwidth;
    if (cfg.q_points) spec.q_points = *cfg.q_points;
    if (cfg.w_halfwidth) spec.w_halfwidth = *cfg.w_halfwidth;
    if (cfg.w_points) spec.w_points = *cfg.w_points;
    if (cfg.rel_tol) spec.rel_tol = *cfg.rel_tol;
    return spec;
}

std::vector<double> sweep_values(const RunConfig& cfg) {
    if (cfg.sweep_axis == SweepAxis::None) return {};
    const int n = cfg.sweep_points;
    std::vector<double> v(static_cast<std::size_t>(n));
    if (cfg.sweep_log) {
        const double la = std::log(cfg.sweep_min);
        const double lb = std::log(cfg.sweep_max);
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
        v.front() = cfg.sweep_min;
        v.back() = cfg.sweep_max;
    } else {
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] =
                cfg.sweep_min + (cfg.sweep_max - cfg.sweep_min) * i / (n - 1);
        v.back() = cfg.sweep_max;
    }
    return v;
}

DetectionGrid config_grid(const RunConfig& cfg) {
    return make_detection_grid(cfg.x_min, cfg.x_max, cfg.x_points, cfg.grid_mode);
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("config.scenario", cfg.scenario);
    e.emplace_back("config.panel", cfg.panel);
    e.emplace_back("config.observable", cfg.observable);
    e.emplace_back("config.rho", format_value_exact(cfg.geom.rho));
    e.emplace_back("config.gain", format_value_exact(cfg.params.g));
    e.emplace_back("config.delta0", format_value_exact(cfg.params.delta0));
    e.emplace_back("config.q0_norm", format_value_exact(cfg.params.q0_norm));
    e.emplace_back("config.crystal_type",
                   cfg.params.crystal_type == CrystalType::TypeI ? "type1" : "type2");
    e.emplace_back("config.amplitude_sq", format_value_exact(cfg.input.amplitude_sq));
    e.emplace_back("config.q_inject", format_value_exact(cfg.input.q_inject));
    e.emplace_back("config.c_omega", format_value_exact(cfg.c_omega));
    e.emplace_back("config.x_min", format_value_exact(cfg.x_min));
    e.emplace_back("config.x_max", format_value_exact(cfg.x_max));
    e.emplace_back("config.x_points", std::to_string(cfg.x_points));
    e.emplace_back("config.grid_mode", grid_mode_name(cfg.grid_mode));
    e.emplace_back("config.sweep_axis", sweep_axis_name(cfg.sweep_axis));
    e.emplace_back("config.sweep_min", format_value_exact(cfg.sweep_min));
    e.emplace_back("config.sweep_max", format_value_exact(cfg.sweep_max));
    e.emplace_back("config.sweep_points", std::to_string(cfg.sweep_points));
    e.emplace_back("config.sweep_log", cfg.sweep_log ? "true" : "false");
    if (cfg.q_halfwidth) e.emplace_back("config.q_halfwidth", format_value_exact(*cfg.q_halfwidth));
    if (cfg.q_points) e.emplace_back("config.q_points", std::to_string(*cfg.q_points));
    if (cfg.w_halfwidth) e.emplace_back("config.w_halfwidth", format_value_exact(*cfg.w_halfwidth));
    if (cfg.w_points) e.emplace_back("config.w_points", std::to_string(*cfg.w_points));
    if (cfg.rel_tol) e.emplace_back("config.rel_tol", format_value_exact(*cfg.rel_tol));
    return e;
}

} // namespace pdc
