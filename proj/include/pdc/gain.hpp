#pragma once

#include <complex>

namespace pdc {

enum class CrystalType { TypeI, TypeII };

/// 1 for type I (indistinguishable polarizations), 0 for type II.
inline double polarization_delta(CrystalType t) { return t == CrystalType::TypeI ? 1.0 : 0.0; }

/// Parametric amplifier parameters in dimensionless units: g is the gain
/// (log of the amplitude amplification over the crystal), delta0 the
/// collinear phase mismatch, q0_norm the transverse phase-matching
/// bandwidth in slit-spectrum units.
struct CrystalParams {
    double g = 0.0;
    double delta0 = 0.0;
    double q0_norm = 1.0;
    CrystalType crystal_type = CrystalType::TypeI;

    CrystalParams() = default;
    CrystalParams(double g_, double delta0_, double q0_norm_, CrystalType type_);
};

/// Input/output transfer coefficients of the amplifier for one (q, w) mode.
/// Unitarity requires |u|^2 - |v|^2 = 1.
struct GainPair {
    std::complex<double> u;
    std::complex<double> v;
};

/// Quadratic phase-mismatch model: delta0 + w^2 - (q / q0_norm)^2.
/// q is the transverse mode in slit-spectrum units, w the frequency
/// detuning in bandwidth units. Even in q and in w separately.
double phase_mismatch(const CrystalParams& p, double q, double w);

/// Gain eigenvalue sqrt(g^2 - delta^2/4). Real and non-negative inside the
/// amplification band |delta| <= 2g, positive imaginary outside, so its
/// argument always lies in [0, pi). Continuous across the branch point.
std::complex<double> gain_eigenvalue(double g, double delta);

/// sinh(x)/x with the removable singularity handled by a series for
/// |x| < 1e-4.
double sinhc(double x);

/// cosh(G) and sinh(G)/G for G = gain_eigenvalue(g, delta). Both are real
/// on either branch: hyperbolic inside the amplification band, circular
/// outside (cosh(i y) = cos y, sinh(i y)/(i y) = sin(y)/y). Every u, v
/// and every collapsed kernel integrand is assembled from this one pair,
/// so the branch logic lives in a single place.
struct GainTerms {
    double ch;  // cosh of the eigenvalue
    double shc; // sinh of the eigenvalue over the eigenvalue
};
GainTerms gain_terms(double g, double delta);

/// Transfer coefficients u, v at mode (q, w):
///   u = Theta (cosh G + i (delta / 2) sinhc G),  v = Theta g sinhc G
/// with G the gain eigenvalue, sinhc G = sinh(G)/G, and the overall phase
/// fixed by the constant convention Theta = exp(-i delta0 / 2). The
/// G -> 0 limit u = Theta (1 + i delta/2), v = Theta g is reproduced
/// exactly by the sinhc series.
GainPair gain_pair(const CrystalParams& p, double q, double w);

/// Gain from an intensity amplification rate r = exp(2g); g = ln(r)/2.
double coupling_from_rate(double rate);

} // namespace pdc
