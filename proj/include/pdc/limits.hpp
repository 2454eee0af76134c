#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pdc/gain.hpp"
#include "pdc/slit.hpp"

namespace pdc {

/// Closed-form coincidence rate in the wide-cone limit (emission band
/// much broader than the slit spectrum, q0_norm >> 1):
///   eta^2 [1 + delta That^2(X2 - X1)] + |xi|^2 That^2(X1 + X2).
/// eta and xi are the collapsed kernel amplitudes at normal emission.
double g2_broadband(double eta_hat, std::complex<double> xi_hat, const SlitGeometry& geom,
                    double x1, double x2, CrystalType type);

/// Coincidence rate shape in the narrow-cone limit (q0_norm -> 0), where
/// the pattern factorizes into independent single-beam fringes:
///   scale [(1 + delta) eta^2 + |xi|^2] That^2(X1) That^2(X2).
/// The overall scale collapses with the emission cone and is not
/// predicted here; callers fit it to the computed map and report it.
double g2_narrowband(double eta_hat, std::complex<double> xi_hat, const SlitGeometry& geom,
                     double x1, double x2, CrystalType type, double scale = 1.0);

/// Visibility of the wide-cone coincidence fringe at equal detector
/// positions, as a function of theta = eta^2 / |xi|^2:
///   V = 1 / (1 + 2 (1 + delta) theta).
/// Equals 1 at theta = 0 and decreases monotonically.
double visibility_v1(double theta, CrystalType type);

/// Visibility of the wide-cone fringe at opposite detector positions,
/// theta / (3 theta + 2): zero at theta = 0, increasing toward 1/3. Only
/// type I crystals show this fringe; TypeII throws InvalidForTypeII.
double visibility_v2(double theta, CrystalType type = CrystalType::TypeI);

/// (max - min) / (max + min) over values[lo..hi] inclusive.
double extract_visibility(const std::vector<double>& values, std::size_t lo, std::size_t hi);

} // namespace pdc
