#pragma once

#include <complex>
#include <vector>

#include "pdc/gain.hpp"
#include "pdc/slit.hpp"

namespace pdc {

/// Trapezoid quadrature windows for the mode integrals. Both axes use
/// uniform grids with an even panel count so the node set contains 0.
/// The frequency window [-w_halfwidth, w_halfwidth] acts as the band
/// limit of the model; its sample density is refined automatically (see
/// omega_collapse), the window itself is not enlarged. rel_tol gates all
/// refinement loops.
struct QuadratureSpec {
    double q_halfwidth = 4.0; // transverse window
    int q_points = 64;        // panels across [-q_halfwidth, q_halfwidth], even, >= 64
    double w_halfwidth = 8.0; // frequency truncation
    int w_points = 256;       // initial panels across the frequency window, even, >= 64
    double rel_tol = 1e-6;    // convergence tolerance for refinement

    void validate() const;
};

/// Physics-aware defaults: the transverse window covers max(4, 4 q0) so
/// the phase-matched band fits; the node spacing resolves both the slit
/// spectrum oscillation (rho/5) and, for narrowband crystals, the gain
/// peak of width ~ q0 sqrt(2g); the frequency window spans well past the
/// amplification band at q = 0. q_points comes out a multiple of 4 so the
/// window can be halved and doubled without moving any node.
QuadratureSpec default_quadrature(const CrystalParams& p, const SlitGeometry& geom);

/// Frequency-collapsed mode kernels on a symmetric transverse grid:
///   s_vals[i] = integral over w of |v(q_i, w)|^2
///   p_vals[i] = integral over w of v(q_i, w) u(-q_i, -w)
/// eta_hat = c_omega * s(0) and xi_hat = c_omega * p(0) are the collapsed
/// auto- and pair-correlation amplitudes at normal emission.
struct SpectralKernels {
    std::vector<double> q_grid;               // ascending, symmetric, contains 0
    std::vector<double> s_vals;               // even in q, >= 0
    std::vector<std::complex<double>> p_vals; // even in q
    double eta_hat = 0.0;
    std::complex<double> xi_hat{0.0, 0.0};
    double c_omega = 1.0;     // overall kernel normalization constant
    double q_step = 0.0;      // exact node spacing used to build q_grid
    double w_halfwidth = 0.0; // frequency window the collapse used
    int w_points_used = 0;    // converged frequency panel count
    int w_rounds = 0;         // frequency density doublings taken

    double q_spacing() const { return q_step; }
};

/// Collapse the frequency axis of the gain kernels by composite trapezoid
/// over [-w_halfwidth, w_halfwidth]. The frequency sample density is
/// doubled until eta_hat and xi_hat move by less than rel_tol between
/// rounds (at most 12 doublings, then ConvergenceFailure). Summation
/// order is fixed (ascending node index) so results are bit-reproducible;
/// the transverse grid points are independent and may be evaluated on
/// `threads` workers without affecting the result.
SpectralKernels omega_collapse(const CrystalParams& p, const QuadratureSpec& spec,
                               double c_omega = 1.0, unsigned threads = 1);

/// Widen the transverse window to new_halfwidth at identical node spacing
/// and frequency density. Existing nodes are copied verbatim; only nodes
/// beyond the old window are computed. new_halfwidth snaps to a whole
/// number of steps and must exceed the current window.
SpectralKernels extend_window(const SpectralKernels& k, const CrystalParams& p,
                              double new_halfwidth, unsigned threads = 1);

/// theta = eta_hat^2 / |xi_hat|^2, the squared ratio of auto- to
/// pair-correlation strength that controls the visibility laws. Throws
/// DegenerateGain when xi_hat vanishes (g = 0).
double theta_ratio(const SpectralKernels& k);

} // namespace pdc
