// Command-line front end: one subcommand per scenario, flags layered on
// top of the scenario defaults and an optional config file.

#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "pdc/config.hpp"
#include "pdc/errors.hpp"
#include "pdc/scenarios.hpp"

namespace {

struct FlagValues {
    std::string config_path, out_dir, panel, mode, axis, observable;
    int threads = 0, grid = 0, samples = 0, type = 0;
    double tol = 0.0, delta0 = 0.0, gain = 0.0, q0 = 0.0, qin = 0.0, amp = 0.0;
    double from = 0.0, to = 0.0;
    bool log = false;
};

struct SubOptions {
    CLI::App* cmd = nullptr;
    CLI::Option *config = nullptr, *out = nullptr, *threads = nullptr, *grid = nullptr;
    CLI::Option *tol = nullptr, *type = nullptr, *panel = nullptr, *delta0 = nullptr;
    CLI::Option *gain = nullptr, *q0 = nullptr, *qin = nullptr, *amp = nullptr;
    CLI::Option *mode = nullptr, *axis = nullptr, *from = nullptr, *to = nullptr;
    CLI::Option *samples = nullptr, *log = nullptr, *observable = nullptr;
};

SubOptions add_scenario(CLI::App& app, FlagValues& f, const std::string& name,
                        const std::string& desc) {
    SubOptions s;
    s.cmd = app.add_subcommand(name, desc);
    s.config = s.cmd->add_option("--config", f.config_path,
                                 "config file applied over the scenario defaults");
    s.out = s.cmd->add_option("--out", f.out_dir, "output directory (default: current)");
    s.threads = s.cmd->add_option("--threads", f.threads,
                                  "worker threads, 0 = all hardware threads");
    s.grid = s.cmd->add_option("--grid", f.grid, "detector grid points");
    s.tol = s.cmd->add_option("--tol", f.tol, "kernel convergence tolerance");
    s.type = s.cmd->add_option("--type", f.type, "crystal type, 1 or 2")
                 ->check(CLI::IsMember({1, 2}));
    s.panel = s.cmd->add_option("--panel", f.panel, "figure panel letter");
    s.delta0 = s.cmd->add_option("--delta0", f.delta0, "collinear phase mismatch");
    s.gain = s.cmd->add_option("--gain", f.gain, "parametric gain");
    s.q0 = s.cmd->add_option("--q0", f.q0, "emission bandwidth in slit-width units");
    s.qin = s.cmd->add_option("--qin", f.qin, "seed injection mode");
    s.amp = s.cmd->add_option("--amp", f.amp, "seed amplitude squared, 0 = spontaneous");
    s.mode = s.cmd->add_option("--mode", f.mode, "grid mode: diagonal, antidiagonal or full");
    s.axis = s.cmd->add_option("--axis", f.axis,
                               "sweep axis: none, gain, bandwidth or injection");
    s.from = s.cmd->add_option("--from", f.from, "sweep start");
    s.to = s.cmd->add_option("--to", f.to, "sweep end");
    s.samples = s.cmd->add_option("--samples", f.samples, "sweep sample count");
    s.log = s.cmd->add_flag("--log", f.log, "geometric sweep spacing");
    s.observable = s.cmd->add_option("--observable", f.observable, "g1 or g2");
    return s;
}

pdc::RunConfig build_config(const std::string& name, const SubOptions& s,
                            const FlagValues& f) {
    pdc::RunConfig cfg = pdc::scenario_defaults(name);
    if (*s.config) pdc::apply_config_file(cfg, f.config_path);
    cfg.scenario = name; // the subcommand wins over any scenario key in the file
    if (*s.out) cfg.out_dir = f.out_dir;
    if (*s.threads) {
        if (f.threads < 0) throw pdc::ConfigError("threads must be >= 0");
        cfg.threads = static_cast<unsigned>(f.threads);
    }
    if (*s.grid) cfg.x_points = f.grid;
    if (*s.tol) cfg.rel_tol = f.tol;
    if (*s.type)
        cfg.params.crystal_type =
            f.type == 1 ? pdc::CrystalType::TypeI : pdc::CrystalType::TypeII;
    if (*s.panel) cfg.panel = f.panel;
    if (*s.delta0) {
        cfg.params.delta0 = f.delta0;
        if (name == "fig3") cfg.panel = "custom";
    }
    if (*s.gain) cfg.params.g = f.gain;
    if (*s.q0) cfg.params.q0_norm = f.q0;
    if (*s.qin) cfg.input.q_inject = f.qin;
    if (*s.amp) cfg.input.amplitude_sq = f.amp;
    if (*s.mode) pdc::apply_config_key(cfg, "grid_mode", f.mode);
    if (*s.axis) pdc::apply_config_key(cfg, "sweep_axis", f.axis);
    if (*s.from) cfg.sweep_min = f.from;
    if (*s.to) cfg.sweep_max = f.to;
    if (*s.samples) cfg.sweep_points = f.samples;
    if (*s.log) cfg.sweep_log = true;
    if (*s.observable) cfg.observable = f.observable;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-slit interference of parametrically down-converted light"};
    app.require_subcommand(1);

    FlagValues f;
    const std::vector<std::pair<std::string, std::string>> scenarios = {
        {"fig2", "coherent-beam reference fringes"},
        {"fig3", "fringe visibilities against gain"},
        {"fig4", "spontaneous coincidence maps against bandwidth"},
        {"fig5", "stimulated one-photon maps against injection mode"},
        {"fig6", "stimulated coincidence maps against injection mode"},
        {"g2", "one coincidence map from the config as given"},
        {"visibility", "kernel amplitudes and visibility laws"},
        {"sweep", "generic map over a configured sweep axis"},
    };
    std::vector<SubOptions> subs;
    subs.reserve(scenarios.size());
    for (const auto& [name, desc] : scenarios) subs.push_back(add_scenario(app, f, name, desc));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i].cmd->parsed()) idx = i;
        const pdc::RunConfig cfg = build_config(scenarios[idx].first, subs[idx], f);
        const pdc::ScenarioResult res = pdc::run_scenario(cfg);
        for (const auto& file : res.files) std::printf("wrote %s\n", file.path.c_str());
        return 0;
    } catch (const pdc::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const pdc::ConvergenceFailure& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
