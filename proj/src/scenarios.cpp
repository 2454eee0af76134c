#include "pdc/scenarios.hpp"

#include <cmath>
#include <filesystem>
#include <utility>

#include "pdc/errors.hpp"
#include "pdc/limits.hpp"
#include "pdc/util.hpp"
#include "pdc/version.hpp"

namespace pdc {

namespace {

std::string joined(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

std::string crystal_name(CrystalType t) {
    return t == CrystalType::TypeI ? "type I" : "type II";
}

std::vector<std::string> base_comments(const RunConfig& cfg, const std::string& what) {
    return {what, "engine " + std::string(engine_version),
            "rho=" + format_value(cfg.geom.rho) + " c_omega=" + format_value(cfg.c_omega)};
}

std::vector<std::pair<std::string, std::string>> kernel_entries(const SpectralKernels& k) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("effective.w_halfwidth", format_value_exact(k.w_halfwidth));
    e.emplace_back("effective.w_points", std::to_string(k.w_points_used));
    e.emplace_back("effective.w_rounds", std::to_string(k.w_rounds));
    e.emplace_back("effective.eta_hat", format_value_exact(k.eta_hat));
    e.emplace_back("effective.xi_hat_re", format_value_exact(k.xi_hat.real()));
    e.emplace_back("effective.xi_hat_im", format_value_exact(k.xi_hat.imag()));
    return e;
}

std::vector<std::pair<std::string, std::string>> effective_entries(const PreparedKernels& pk) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("effective.q_halfwidth", format_value_exact(pk.effective.q_halfwidth));
    e.emplace_back("effective.q_points", std::to_string(pk.effective.q_points));
    e.emplace_back("effective.q_rounds", std::to_string(pk.q_rounds));
    for (auto& kv : kernel_entries(pk.kernels)) e.push_back(std::move(kv));
    return e;
}

// Write the run manifest: config echo, conventions, effective quadrature
// (single-kernel runs only), and a checksum per written file.
void finish(ScenarioResult& res, const RunConfig& cfg,
            const std::vector<std::pair<std::string, std::string>>& effective) {
    auto entries = config_entries(cfg);
    entries.emplace_back("info.engine_version", engine_version);
    entries.emplace_back("info.phase_convention", "constant Theta = exp(-i delta0 / 2)");
    for (const auto& kv : effective) entries.push_back(kv);
    for (const auto& f : res.files)
        entries.emplace_back("checksum." + f.name, checksum_hex(f.checksum));
    res.files.push_back(
        write_text_file(joined(cfg, cfg.scenario + ".manifest"), render_manifest(entries)));
}

void write_map(ScenarioResult& res, const RunConfig& cfg, const CorrelationMap& map,
               const std::string& stem, const std::string& what) {
    res.files.push_back(
        write_text_file(joined(cfg, stem + ".csv"), render_map_csv(base_comments(cfg, what), map)));
    if (!map.sweep.empty() || map.grid.mode == GridMode::Full) {
        PgmScale scale;
        const std::string pgm = render_pgm16(map, scale);
        res.files.push_back(write_text_file(joined(cfg, stem + ".pgm"), pgm));
        res.files.push_back(
            write_text_file(joined(cfg, stem + ".scale.txt"), render_pgm_scale(scale, map)));
    }
}

std::string param_comment(const CrystalParams& p) {
    return crystal_name(p.crystal_type) + " gain=" + format_value(p.g) +
           " delta0=" + format_value(p.delta0) + " q0_norm=" + format_value(p.q0_norm);
}

PreparedKernels prepare(const RunConfig& cfg) {
    return converged_kernels(cfg.params, cfg.geom, resolve_quadrature(cfg), cfg.c_omega,
                             cfg.threads);
}

CorrelationMap single_shot_stimulated(const RunConfig& cfg, const PreparedKernels& pk,
                                      const DetectionGrid& grid) {
    if (grid.mode != GridMode::Full) {
        CorrelationMap map =
            stimulated_g2_map(cfg.params, pk, cfg.geom, cfg.input.amplitude_sq,
                              {cfg.input.q_inject}, grid, cfg.params.crystal_type, cfg.threads);
        map.sweep.clear();
        map.sweep_name.clear();
        map.meta.input = cfg.input;
        return map;
    }
    CorrelationMap map;
    map.grid = grid;
    const std::size_t nx = grid.points.size();
    map.values.resize(nx * nx);
    const SpectralKernels& k = pk.kernels;
    parallel_for(nx * nx, cfg.threads, [&](std::size_t c) {
        map.values[c] = g2_stimulated(cfg.params, k, cfg.geom, cfg.input,
                                      grid.points[c / nx], grid.points[c % nx],
                                      cfg.params.crystal_type);
    });
    map.meta.params = cfg.params;
    map.meta.geom = cfg.geom;
    map.meta.quad = pk.effective;
    map.meta.input = cfg.input;
    map.meta.c_omega = k.c_omega;
    map.meta.stimulated = true;
    map.meta.observable = "g2";
    map.meta.version = engine_version;
    map.meta.q_rounds = pk.q_rounds;
    map.meta.w_rounds = k.w_rounds;
    return map;
}

ScenarioResult sweep_core(const RunConfig& cfg) {
    const std::vector<double> svals = sweep_values(cfg);
    const bool want_g1 = cfg.observable == "g1";
    const CrystalType type = cfg.params.crystal_type;
    const bool polsum = type == CrystalType::TypeII;
    ScenarioResult res;

    if (cfg.sweep_axis == SweepAxis::Injection) {
        const DetectionGrid grid = config_grid(cfg);
        if (grid.mode == GridMode::Full)
            throw ConfigError("an injection sweep needs a diagonal or antidiagonal grid");
        const PreparedKernels pk = prepare(cfg);
        const CorrelationMap map =
            want_g1 ? stimulated_g1_map(cfg.params, pk, cfg.geom, cfg.input.amplitude_sq,
                                        svals, grid, type, polsum, cfg.threads)
                    : stimulated_g2_map(cfg.params, pk, cfg.geom, cfg.input.amplitude_sq,
                                        svals, grid, type, cfg.threads);
        write_map(res, cfg, map, cfg.scenario,
                  (want_g1 ? std::string("one-photon rate vs injection mode, ")
                           : std::string("coincidence rate vs injection mode, ")) +
                      param_comment(cfg.params));
        finish(res, cfg, effective_entries(pk));
        return res;
    }

    const DetectionGrid grid = config_grid(cfg);
    if (grid.mode == GridMode::Full)
        throw ConfigError("a swept map needs a diagonal or antidiagonal grid");
    const bool gain_axis = cfg.sweep_axis == SweepAxis::Gain;
    CorrelationMap map;
    for (std::size_t r = 0; r < svals.size(); ++r) {
        RunConfig tmp = cfg;
        if (gain_axis)
            tmp.params.g = svals[r];
        else
            tmp.params.q0_norm = svals[r];
        const PreparedKernels pk = prepare(tmp);
        CorrelationMap row;
        if (want_g1)
            row = stimulated_g1_map(tmp.params, pk, cfg.geom, cfg.input.amplitude_sq,
                                    {cfg.input.q_inject}, grid, type, polsum, cfg.threads);
        else if (cfg.input.amplitude_sq > 0.0)
            row = stimulated_g2_map(tmp.params, pk, cfg.geom, cfg.input.amplitude_sq,
                                    {cfg.input.q_inject}, grid, type, cfg.threads);
        else
            row = spontaneous_map(pk, cfg.geom, grid, type, cfg.threads);
        if (r == 0) {
            map = row;
            map.values.clear();
            map.values.reserve(svals.size() * grid.points.size());
            map.sweep = svals;
            map.sweep_name = gain_axis ? "g" : "q0_norm";
        }
        map.values.insert(map.values.end(), row.values.begin(), row.values.end());
    }
    write_map(res, cfg, map, cfg.scenario,
              std::string(want_g1 ? "one-photon rate" : "coincidence rate") + " vs " +
                  (gain_axis ? "gain, " : "bandwidth, ") + param_comment(cfg.params));
    finish(res, cfg, {});
    return res;
}

} // namespace

RunConfig scenario_defaults(const std::string& scenario) {
    RunConfig cfg;
    cfg.scenario = scenario;
    if (scenario == "fig2") {
        cfg.input = {1.0, 0.0};
    } else if (scenario == "fig3") {
        cfg.sweep_axis = SweepAxis::Gain;
        cfg.sweep_min = 0.01;
        cfg.sweep_max = 3.0;
        cfg.sweep_points = 81;
        cfg.sweep_log = true;
    } else if (scenario == "fig4") {
        cfg.params = CrystalParams(0.5 * std::log(1.5), 0.0, 50.0, CrystalType::TypeI);
        cfg.sweep_axis = SweepAxis::Bandwidth;
        cfg.sweep_min = 1e-3;
        cfg.sweep_max = 50.0;
        cfg.sweep_points = 81;
        cfg.sweep_log = true;
    } else if (scenario == "fig5" || scenario == "fig6") {
        cfg.params = CrystalParams(0.5 * std::log(10.0), 0.0, 2.0, CrystalType::TypeI);
        cfg.input = {1.0, 0.0};
        cfg.sweep_axis = SweepAxis::Injection;
        cfg.sweep_min = 0.0;
        cfg.sweep_max = 3.0;
        cfg.sweep_points = 81;
        cfg.sweep_log = false;
    } else if (scenario == "g2" || scenario == "visibility" || scenario == "sweep") {
        cfg.params = CrystalParams(0.5 * std::log(1.5), 0.0, 50.0, CrystalType::TypeI);
    } else {
        throw ConfigError("unknown scenario '" + scenario + "'");
    }
    return cfg;
}

ScenarioResult run_fig2(const RunConfig& cfg) {
    const DetectionGrid grid = config_grid(cfg);
    const double intensity = cfg.input.amplitude_sq;
    std::vector<double> g1(grid.points.size()), g2(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        g1[i] = coherent_g1(grid.points[i], cfg.geom, intensity);
        g2[i] = coherent_g2(grid.points[i], grid.points[i], cfg.geom, intensity);
    }
    ScenarioResult res;
    const std::vector<CsvColumn> cols{{"x", &grid.points}, {"g1", &g1}, {"g2", &g2}};
    res.files.push_back(write_text_file(
        joined(cfg, "fig2.csv"),
        render_curve_csv(base_comments(cfg, "coherent-beam reference fringes"), cols)));
    finish(res, cfg, {});
    return res;
}

ScenarioResult run_fig3(const RunConfig& cfg) {
    if (cfg.sweep_axis != SweepAxis::Gain)
        throw ConfigError("fig3 sweeps the gain axis");
    if (!(cfg.sweep_min > 0.0)) throw ConfigError("fig3 needs sweep_min > 0");

    struct Panel {
        std::string file;
        double delta0;
    };
    std::vector<Panel> panels;
    if (cfg.panel == "custom") {
        panels.push_back({"fig3.csv", cfg.params.delta0});
    } else if (!cfg.panel.empty()) {
        const double d0 = cfg.panel == "a" ? -5.85 : cfg.panel == "b" ? 0.0 : 5.85;
        panels.push_back({"fig3" + cfg.panel + ".csv", d0});
    } else {
        panels = {{"fig3a.csv", -5.85}, {"fig3b.csv", 0.0}, {"fig3c.csv", 5.85}};
    }

    const std::vector<double> gs = sweep_values(cfg);
    ScenarioResult res;
    for (const auto& pan : panels) {
        std::vector<double> theta(gs.size()), v1_t2(gs.size()), v1_t1(gs.size()),
            v2_t1(gs.size());
        for (std::size_t i = 0; i < gs.size(); ++i) {
            RunConfig tmp = cfg;
            tmp.params.g = gs[i];
            tmp.params.delta0 = pan.delta0;
            QuadratureSpec spec = resolve_quadrature(tmp);
            // theta depends only on the q = 0 node; keep the grid minimal
            // unless the caller pinned it.
            if (!cfg.q_halfwidth) spec.q_halfwidth = 4.0;
            if (!cfg.q_points) spec.q_points = 64;
            const SpectralKernels k = omega_collapse(tmp.params, spec, cfg.c_omega, cfg.threads);
            theta[i] = theta_ratio(k);
            v1_t2[i] = visibility_v1(theta[i], CrystalType::TypeII);
            v1_t1[i] = visibility_v1(theta[i], CrystalType::TypeI);
            v2_t1[i] = visibility_v2(theta[i]);
        }
        const std::vector<CsvColumn> cols{{"g", &gs},
                                          {"theta", &theta},
                                          {"v1_type2", &v1_t2},
                                          {"v1_type1", &v1_t1},
                                          {"v2_type1", &v2_t1}};
        res.files.push_back(write_text_file(
            joined(cfg, pan.file),
            render_curve_csv(base_comments(cfg, "fringe visibilities vs gain, delta0=" +
                                                    format_value(pan.delta0)),
                             cols)));
    }
    finish(res, cfg, {});
    return res;
}

ScenarioResult run_fig4(const RunConfig& cfg) {
    if (cfg.sweep_axis != SweepAxis::Bandwidth)
        throw ConfigError("fig4 sweeps the bandwidth axis");

    struct Panel {
        char label;
        CrystalType type;
        GridMode mode;
        double gain;
    };
    const double g_diag = 0.5 * std::log(1.5);
    const double g_anti = 0.5 * std::log(10.0);
    const std::vector<Panel> all = {{'a', CrystalType::TypeI, GridMode::Diagonal, g_diag},
                                    {'b', CrystalType::TypeI, GridMode::Antidiagonal, g_anti},
                                    {'c', CrystalType::TypeII, GridMode::Diagonal, g_diag},
                                    {'d', CrystalType::TypeII, GridMode::Antidiagonal, g_anti}};
    std::vector<Panel> panels;
    for (const auto& p : all)
        if (cfg.panel.empty() || cfg.panel[0] == p.label) panels.push_back(p);

    const std::vector<double> q0s = sweep_values(cfg);
    std::vector<CorrelationMap> maps(panels.size());

    // One kernel set serves every panel that shares its gain.
    for (double gain : {g_diag, g_anti}) {
        bool used = false;
        for (const auto& p : panels) used = used || p.gain == gain;
        if (!used) continue;
        for (std::size_t r = 0; r < q0s.size(); ++r) {
            RunConfig tmp = cfg;
            tmp.params.g = gain;
            tmp.params.q0_norm = q0s[r];
            const PreparedKernels pk = prepare(tmp);
            for (std::size_t ip = 0; ip < panels.size(); ++ip) {
                if (panels[ip].gain != gain) continue;
                const DetectionGrid grid =
                    make_detection_grid(cfg.x_min, cfg.x_max, cfg.x_points, panels[ip].mode);
                CorrelationMap row = spontaneous_map(pk, cfg.geom, grid, panels[ip].type,
                                                     cfg.threads);
                if (r == 0) {
                    maps[ip] = row;
                    maps[ip].values.clear();
                    maps[ip].values.reserve(q0s.size() * grid.points.size());
                    maps[ip].sweep = q0s;
                    maps[ip].sweep_name = "q0_norm";
                }
                maps[ip].values.insert(maps[ip].values.end(), row.values.begin(),
                                       row.values.end());
            }
        }
    }

    ScenarioResult res;
    for (std::size_t ip = 0; ip < panels.size(); ++ip) {
        const Panel& p = panels[ip];
        const std::string what =
            std::string("coincidence rate vs bandwidth, ") + crystal_name(p.type) +
            (p.mode == GridMode::Diagonal ? ", equal positions, gain="
                                          : ", opposite positions, gain=") +
            format_value(p.gain);
        write_map(res, cfg, maps[ip], std::string("fig4") + p.label, what);
    }
    finish(res, cfg, {});
    return res;
}

ScenarioResult run_fig5(const RunConfig& cfg) {
    if (cfg.sweep_axis != SweepAxis::Injection)
        throw ConfigError("fig5 sweeps the injection axis");
    const std::vector<double> qins = sweep_values(cfg);
    const PreparedKernels pk = prepare(cfg);
    const DetectionGrid grid =
        make_detection_grid(cfg.x_min, cfg.x_max, cfg.x_points, GridMode::Diagonal);
    ScenarioResult res;
    if (cfg.panel.empty() || cfg.panel == "a") {
        CrystalParams p = cfg.params;
        p.crystal_type = CrystalType::TypeI;
        const CorrelationMap m = stimulated_g1_map(p, pk, cfg.geom, cfg.input.amplitude_sq,
                                                   qins, grid, p.crystal_type, false,
                                                   cfg.threads);
        write_map(res, cfg, m, "fig5a",
                  "stimulated one-photon fringes vs injection mode, " + param_comment(p));
    }
    if (cfg.panel.empty() || cfg.panel == "b") {
        CrystalParams p = cfg.params;
        p.crystal_type = CrystalType::TypeII;
        const CorrelationMap m = stimulated_g1_map(p, pk, cfg.geom, cfg.input.amplitude_sq,
                                                   qins, grid, p.crystal_type, true,
                                                   cfg.threads);
        write_map(res, cfg, m, "fig5b",
                  "stimulated one-photon fringes vs injection mode, both polarizations, " +
                      param_comment(p));
    }
    finish(res, cfg, effective_entries(pk));
    return res;
}

ScenarioResult run_fig6(const RunConfig& cfg) {
    if (cfg.sweep_axis != SweepAxis::Injection)
        throw ConfigError("fig6 sweeps the injection axis");

    struct Panel {
        char label;
        CrystalType type;
        GridMode mode;
    };
    const std::vector<Panel> all = {{'a', CrystalType::TypeI, GridMode::Diagonal},
                                    {'b', CrystalType::TypeI, GridMode::Antidiagonal},
                                    {'c', CrystalType::TypeII, GridMode::Diagonal},
                                    {'d', CrystalType::TypeII, GridMode::Antidiagonal}};
    const std::vector<double> qins = sweep_values(cfg);
    const PreparedKernels pk = prepare(cfg);
    ScenarioResult res;
    for (const auto& pan : all) {
        if (!cfg.panel.empty() && cfg.panel[0] != pan.label) continue;
        CrystalParams p = cfg.params;
        p.crystal_type = pan.type;
        const DetectionGrid grid =
            make_detection_grid(cfg.x_min, cfg.x_max, cfg.x_points, pan.mode);
        const CorrelationMap m = stimulated_g2_map(p, pk, cfg.geom, cfg.input.amplitude_sq,
                                                   qins, grid, pan.type, cfg.threads);
        const std::string what =
            std::string("stimulated coincidence rate vs injection mode, ") +
            (pan.mode == GridMode::Diagonal ? "equal positions, " : "opposite positions, ") +
            param_comment(p);
        write_map(res, cfg, m, std::string("fig6") + pan.label, what);
    }
    finish(res, cfg, effective_entries(pk));
    return res;
}

ScenarioResult run_g2(const RunConfig& cfg) {
    if (cfg.sweep_axis == SweepAxis::Gain || cfg.sweep_axis == SweepAxis::Bandwidth) {
        RunConfig tmp = cfg;
        tmp.observable = "g2";
        return sweep_core(tmp);
    }
    const DetectionGrid grid = config_grid(cfg);
    if (cfg.sweep_axis == SweepAxis::Injection && grid.mode == GridMode::Full)
        throw ConfigError("an injection sweep needs a diagonal or antidiagonal grid");

    const PreparedKernels pk = prepare(cfg);
    CorrelationMap map;
    if (cfg.sweep_axis == SweepAxis::Injection) {
        map = stimulated_g2_map(cfg.params, pk, cfg.geom, cfg.input.amplitude_sq,
                                sweep_values(cfg), grid, cfg.params.crystal_type, cfg.threads);
    } else if (cfg.input.amplitude_sq > 0.0) {
        map = single_shot_stimulated(cfg, pk, grid);
    } else {
        map = spontaneous_map(pk, cfg.geom, grid, cfg.params.crystal_type, cfg.threads);
    }
    ScenarioResult res;
    write_map(res, cfg, map, cfg.scenario, "coincidence rate, " + param_comment(cfg.params));
    finish(res, cfg, effective_entries(pk));
    return res;
}

ScenarioResult run_visibility(const RunConfig& cfg) {
    if (!(cfg.params.g > 0.0)) throw ConfigError("visibility needs gain > 0");
    QuadratureSpec spec = resolve_quadrature(cfg);
    // theta depends only on the q = 0 node; see run_fig3.
    if (!cfg.q_halfwidth) spec.q_halfwidth = 4.0;
    if (!cfg.q_points) spec.q_points = 64;
    const SpectralKernels k = omega_collapse(cfg.params, spec, cfg.c_omega, cfg.threads);
    const double th = theta_ratio(k);

    const std::vector<double> g{cfg.params.g}, d0{cfg.params.delta0}, eta{k.eta_hat},
        xi{std::abs(k.xi_hat)}, theta{th}, v1_1{visibility_v1(th, CrystalType::TypeI)},
        v1_2{visibility_v1(th, CrystalType::TypeII)}, v2_1{visibility_v2(th)};
    const std::vector<CsvColumn> cols{{"g", &g},           {"delta0", &d0},
                                      {"eta_hat", &eta},   {"xi_abs", &xi},
                                      {"theta", &theta},   {"v1_type1", &v1_1},
                                      {"v1_type2", &v1_2}, {"v2_type1", &v2_1}};
    ScenarioResult res;
    res.files.push_back(write_text_file(
        joined(cfg, "visibility.csv"),
        render_curve_csv(base_comments(cfg, "kernel amplitudes and visibility laws"), cols)));
    finish(res, cfg, kernel_entries(k));
    return res;
}

ScenarioResult run_sweep(const RunConfig& cfg) { return sweep_core(cfg); }

ScenarioResult run_scenario(const RunConfig& cfg) {
    validate_config(cfg);
    if (cfg.out_dir != ".") {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out_dir, ec);
        if (ec) throw Error("cannot create output directory " + cfg.out_dir);
    }
    if (cfg.scenario == "fig2") return run_fig2(cfg);
    if (cfg.scenario == "fig3") return run_fig3(cfg);
    if (cfg.scenario == "fig4") return run_fig4(cfg);
    if (cfg.scenario == "fig5") return run_fig5(cfg);
    if (cfg.scenario == "fig6") return run_fig6(cfg);
    if (cfg.scenario == "g2") return run_g2(cfg);
    if (cfg.scenario == "visibility") return run_visibility(cfg);
    if (cfg.scenario == "sweep") return run_sweep(cfg);
    throw ConfigError("unknown scenario '" + cfg.scenario + "'");
}

} // namespace pdc
