#pragma once

#include <complex>
#include <vector>

#include "pdc/slit.hpp"

namespace pdc {

/// Which photon's detector is scanned in a first-order correlation.
enum class Arm { Signal, Idler };

/// Discrete two-photon amplitude C(q_s, q_i) on uniform transverse-mode
/// grids. values is row-major with the signal index major:
/// values[is * qi_grid.size() + ii]. All correlation sums are plain
/// Riemann sums weighted by the cell area.
struct BiphotonAmplitude {
    std::vector<double> qs_grid;
    std::vector<double> qi_grid;
    std::vector<std::complex<double>> values;

    double qs_spacing() const { return qs_grid[1] - qs_grid[0]; }
    double qi_spacing() const { return qi_grid[1] - qi_grid[0]; }
};

/// Validate grids (uniform, >= 2 nodes) and the value count, and require
/// a nonzero amplitude. Throws Error on violation.
BiphotonAmplitude make_biphoton(std::vector<double> qs_grid, std::vector<double> qi_grid,
                                std::vector<std::complex<double>> values);

/// Sum |C|^2 dqs dqi over the grid.
double biphoton_norm(const BiphotonAmplitude& amp);

/// Rescale so biphoton_norm == 1.
BiphotonAmplitude normalized(BiphotonAmplitude amp);

/// Product state C(q_s, q_i) = f_s(q_s) f_i(q_i).
BiphotonAmplitude separable_biphoton(std::vector<double> qs_grid, std::vector<double> qi_grid,
                                     const std::vector<std::complex<double>>& f_signal,
                                     const std::vector<std::complex<double>>& f_idler);

/// Perfectly anticorrelated state: nonzero only on the single-cell ridge
/// q_i = -q_s, with the delta function carried as 1/dqi so each ridge
/// cell has unit integral across the idler axis. The grid must contain
/// the negative of every node (uniform and symmetric about 0).
BiphotonAmplitude ridge_biphoton(std::vector<double> q_grid,
                                 const std::vector<std::complex<double>>& ridge_values);

/// Two-photon detection amplitude behind the slits, signal photon at X2
/// and idler photon at X1:
///   A(X1, X2) = Sum C(q_s, q_i) That(X2 - q_s) That(X1 - q_i) dqs dqi.
std::complex<double> biphoton_wavepacket(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                                         double x1, double x2);

/// Coincidence rate |A(X1, X2)|^2.
double biphoton_g2(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                   double x1, double x2);

/// First-order correlation of one arm with the partner photon traced out:
///   Signal: Sum_i [Sum_s C(s,i) That(X1-q_s)]* [Sum_s' C(s',i) That(X2-q_s')] dqs^2 dqi
/// and the mirror expression for the idler arm. Hermitian in (X1, X2);
/// the diagonal X1 = X2 is the one-photon rate.
std::complex<double> biphoton_g1(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                                 double x1, double x2, Arm arm);

} // namespace pdc
