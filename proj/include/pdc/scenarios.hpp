#pragma once

#include <string>
#include <vector>

#include "pdc/config.hpp"
#include "pdc/io.hpp"

namespace pdc {

/// Files produced by one scenario run, manifest last.
struct ScenarioResult {
    std::vector<WrittenFile> files;
};

/// Canonical starting config for a named scenario (figure parameters,
/// sweep axes and ranges); CLI flags and config files override it.
RunConfig scenario_defaults(const std::string& scenario);

/// Coherent-beam reference curves: one-photon and two-photon rates over
/// the detector grid. Writes <out>/fig2.csv.
ScenarioResult run_fig2(const RunConfig& cfg);

/// Fringe visibilities against gain at the three standard phase-mismatch
/// values (panels a, b, c = -5.85, 0, +5.85; cfg.panel selects one).
/// Gain is swept geometrically over [sweep_min, sweep_max]. Writes
/// fig3<panel>.csv with columns g, theta, v1_type2, v1_type1, v2_type1.
ScenarioResult run_fig3(const RunConfig& cfg);

/// Spontaneous coincidence maps against emission bandwidth q0_norm
/// (geometric sweep). Panels: a = TypeI equal positions at amplification
/// 1.5, b = TypeI opposite positions at amplification 10, c/d = same for
/// TypeII. Kernels are shared between panels with equal gain. Writes
/// fig4<panel>.csv, .pgm and .scale.txt per panel.
ScenarioResult run_fig4(const RunConfig& cfg);

/// Stimulated one-photon maps against injection mode (panel a = TypeI,
/// b = TypeII summed over polarizations).
ScenarioResult run_fig5(const RunConfig& cfg);

/// Stimulated coincidence maps against injection mode (a = TypeI equal,
/// b = TypeI opposite, c = TypeII equal, d = TypeII opposite positions).
ScenarioResult run_fig6(const RunConfig& cfg);

/// One coincidence map from the config as given (spontaneous when the
/// seed amplitude is zero, stimulated otherwise; optional sweep axis).
ScenarioResult run_g2(const RunConfig& cfg);

/// Kernel amplitudes and visibility laws for one parameter set: writes a
/// single-row CSV with eta, xi, theta and the three visibilities.
ScenarioResult run_visibility(const RunConfig& cfg);

/// Generic map over the configured sweep axis: g2 per cell (spontaneous
/// or stimulated by seed amplitude), g1 when observable demands.
ScenarioResult run_sweep(const RunConfig& cfg);

/// Dispatch on cfg.scenario ("fig2".."fig6", "g2", "visibility", "sweep").
ScenarioResult run_scenario(const RunConfig& cfg);

} // namespace pdc
