#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdc/engine.hpp"
#include "pdc/gain.hpp"
#include "pdc/kernels.hpp"
#include "pdc/slit.hpp"

namespace pdc {

/// Axis swept by 2-D scenarios. Gain sweeps g, Bandwidth sweeps q0_norm,
/// Injection sweeps the seed mode q_inject.
enum class SweepAxis { None, Gain, Bandwidth, Injection };

/// Full description of one run. Everything that affects output bytes
/// lives here except the thread count, which never does.
struct RunConfig {
    std::string scenario = "g2";
    std::string panel;          // figure panel selector, empty = all panels
    std::string observable = "g2"; // "g2" or "g1", honored by the sweep scenario

    SlitGeometry geom;
    CrystalParams params;
    StimulatedInput input{0.0, 0.0}; // zero seed: spontaneous
    double c_omega = 1.0;

    double x_min = -1.0;
    double x_max = 1.0;
    int x_points = 401;
    GridMode grid_mode = GridMode::Diagonal;

    SweepAxis sweep_axis = SweepAxis::None;
    double sweep_min = 0.0;
    double sweep_max = 0.0;
    int sweep_points = 81;
    bool sweep_log = false;

    // Quadrature overrides; unset fields fall back to default_quadrature.
    std::optional<double> q_halfwidth;
    std::optional<int> q_points;
    std::optional<double> w_halfwidth;
    std::optional<int> w_points;
    std::optional<double> rel_tol;

    unsigned threads = 1;
    std::string out_dir = ".";
};

/// Assign one key=value pair. Unknown keys throw ConfigError; keys under
/// the "checksum.", "effective." and "info." prefixes are informational
/// output and are skipped, so a manifest file parses as a config. A
/// leading "config." prefix is stripped for the same reason.
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Apply flat key=value text ('#' comments, blank lines allowed) on top
/// of an existing config, e.g. scenario defaults.
void apply_config_text(RunConfig& cfg, const std::string& text);

/// Parse flat key=value text into a fresh config.
RunConfig parse_config_text(const std::string& text);

/// Apply a config (or manifest) file on top of an existing config.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Load and parse a config (or manifest) file.
RunConfig load_config_file(const std::string& path);

/// Range and consistency checks; throws ConfigError on violation.
void validate_config(const RunConfig& cfg);

/// Quadrature the run will request: physics-aware defaults from params
/// and geometry, with any explicit overrides applied on top.
QuadratureSpec resolve_quadrature(const RunConfig& cfg);

/// The sampled sweep-axis values (geometric spacing when sweep_log).
std::vector<double> sweep_values(const RunConfig& cfg);

/// Detector grid described by the config.
DetectionGrid config_grid(const RunConfig& cfg);

/// Manifest echo of the config: "config.<key>" entries covering every
/// field that affects output bytes. Quadrature overrides appear only
/// when explicitly set, so scenarios that re-derive their quadrature per
/// sweep sample re-run identically from the manifest. Thread count and
/// output directory are deliberately absent.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

} // namespace pdc
