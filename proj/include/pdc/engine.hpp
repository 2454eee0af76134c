#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pdc/gain.hpp"
#include "pdc/kernels.hpp"
#include "pdc/slit.hpp"

namespace pdc {

/// Coherent seed beam injected into the amplifier at transverse mode
/// q_inject, with squared amplitude amplitude_sq. Zero amplitude means
/// purely spontaneous operation.
struct StimulatedInput {
    double amplitude_sq = 1.0;
    double q_inject = 0.0;
};

/// Which field reaches the detector in stimulated operation. Combined is
/// the coherent sum of the amplified seed and its conjugate, the case of
/// a type I crystal where both carry the same polarization; Signal and
/// Idler select one polarization of a type II crystal.
enum class Beam { Signal, Idler, Combined };

/// Parameter record attached to every computed map so output files can be
/// regenerated from their own metadata.
struct MapMeta {
    CrystalParams params;
    SlitGeometry geom;
    QuadratureSpec quad;        // effective quadrature after convergence
    StimulatedInput input;      // meaningful when stimulated
    double c_omega = 1.0;
    bool stimulated = false;
    bool polarization_summed = false;
    std::string observable;     // "g1" or "g2"
    std::string phase_convention = "constant Theta = exp(-i delta0 / 2)";
    std::string version;
    int q_rounds = 0;           // transverse window doublings taken
    int w_rounds = 0;           // frequency density doublings taken
};

/// A computed correlation map. For a plain curve, sweep is empty and
/// values[i] pairs with grid.points[i]. For a swept map, values is
/// row-major with one row per sweep entry: values[r * nx + i]. For
/// GridMode::Full, values[i1 * nx + i2] pairs with (X1, X2) =
/// (points[i1], points[i2]) and sweep is empty.
struct CorrelationMap {
    DetectionGrid grid;
    std::vector<double> sweep;
    std::string sweep_name;
    std::vector<double> values;
    MapMeta meta;
};

/// Frequency-collapsed kernels plus the crystal they were computed for
/// and the quadrature that was actually used.
struct PreparedKernels {
    SpectralKernels kernels;
    CrystalParams params;
    QuadratureSpec effective;
    int q_rounds = 0;
};

/// Collapse the frequency axis, then double the transverse window (at
/// fixed spacing, reusing already-computed nodes) until the reference
/// rate M(0,0) moves by less than rel_tol between rounds; at most 12
/// doublings, then ConvergenceFailure.
PreparedKernels converged_kernels(const CrystalParams& p, const SlitGeometry& geom,
                                  const QuadratureSpec& spec, double c_omega = 1.0,
                                  unsigned threads = 1);

/// Auto-correlation of one converted beam behind the slits:
///   M(X1, X2) = 2 c_omega Integral dq s(q) That(X1 - q) That(X2 - q).
/// Real and symmetric in (X1, X2); M(X, X) is the one-photon rate.
double m_kernel(const SpectralKernels& k, const SlitGeometry& geom, double x1, double x2);

/// Cross-correlation of the signal/idler pair behind the slits:
///   N(X1, X2) = 2 c_omega Integral dq p(q) That(X1 - q) That(X2 + q).
/// Complex; symmetric under X1 <-> X2.
std::complex<double> n_kernel(const SpectralKernels& k, const SlitGeometry& geom,
                              double x1, double x2);

/// Two-photon coincidence rate without a seed beam:
///   M(X1,X1) M(X2,X2) + |N(X1,X2)|^2 + delta M(X1,X2)^2,
/// delta = 1 for TypeI, 0 for TypeII. The kernels carry no polarization
/// information, so one kernel set serves both crystal types. Round-off
/// negatives above -1e-12 are clamped to zero.
double g2_spontaneous(const SpectralKernels& k, const SlitGeometry& geom,
                      double x1, double x2, CrystalType type);

/// Seed field at detector position x, with (u, v) = gain_pair at the
/// injection mode and a = sqrt(amplitude_sq):
///   Signal:   a u That(x - q_inject)   (amplified seed)
///   Idler:    a v That(x + q_inject)   (conjugate beam)
///   Combined: their sum.
std::complex<double> w_amplitude(const CrystalParams& p, const SlitGeometry& geom,
                                 const StimulatedInput& in, double x, Beam beam);

/// One-photon rate in stimulated operation: |W(x)|^2 + M(x, x) for the
/// selected beam. Reduces to the spontaneous rate at zero seed amplitude.
double g1_stimulated(const CrystalParams& p, const SpectralKernels& k,
                     const SlitGeometry& geom, const StimulatedInput& in,
                     double x, Beam beam);

/// Two-photon coincidence rate in stimulated operation, detector 1 on the
/// idler side and detector 2 on the signal side:
///   [|Wi(X1)|^2 + M(X1,X1)] [|Ws(X2)|^2 + M(X2,X2)]
///   + 2 Re[Wi(X1) Ws(X2) conj(N(X1,X2))] + |N(X1,X2)|^2
///   + delta { 2 Re[conj(W(X1)) W(X2)] M(X1,X2) + M(X1,X2)^2 }
/// where for TypeI (delta = 1) the beams merge into the Combined field W.
/// Reduces to g2_spontaneous at zero seed and, for TypeI at zero gain, to
/// the coherent coincidence rate of the seed alone.
double g2_stimulated(const CrystalParams& p, const SpectralKernels& k,
                     const SlitGeometry& geom, const StimulatedInput& in,
                     double x1, double x2, CrystalType type);

/// Spontaneous coincidence map over a detection grid. Diagonal pairs
/// (X, X), Antidiagonal pairs (-X, X), Full covers the product grid.
/// Cells are independent; the values are identical for any thread count.
CorrelationMap spontaneous_map(const PreparedKernels& pk, const SlitGeometry& geom,
                               const DetectionGrid& grid, CrystalType type,
                               unsigned threads = 1);

/// Stimulated one-photon map swept over injection modes (one row per
/// q_inject value). TypeI detects the Combined beam; TypeII detects the
/// signal polarization, or the incoherent sum of both patterns when
/// polarization_summed is set.
CorrelationMap stimulated_g1_map(const CrystalParams& p, const PreparedKernels& pk,
                                 const SlitGeometry& geom, double amplitude_sq,
                                 const std::vector<double>& q_inject_sweep,
                                 const DetectionGrid& grid, CrystalType type,
                                 bool polarization_summed, unsigned threads = 1);

/// Stimulated coincidence map swept over injection modes. On the
/// antidiagonal the scan position X is the signal-side detector:
/// value(X) = g2 at (X1, X2) = (-X, X).
CorrelationMap stimulated_g2_map(const CrystalParams& p, const PreparedKernels& pk,
                                 const SlitGeometry& geom, double amplitude_sq,
                                 const std::vector<double>& q_inject_sweep,
                                 const DetectionGrid& grid, CrystalType type,
                                 unsigned threads = 1);

} // namespace pdc
