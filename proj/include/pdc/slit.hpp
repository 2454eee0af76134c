#pragma once

#include <vector>

namespace pdc {

/// Double-slit geometry in dimensionless units. Positions across the slit
/// plane are measured in slit widths, so each slit has width 1 and the
/// centre-to-centre separation is 1/rho. Detector positions X and
/// transverse modes Q are measured in the paired Fourier units in which
/// the slit spectrum reads sinc(pi Q) cos(pi Q / rho).
struct SlitGeometry {
    double rho = 0.2; // slit width / slit separation, in (0, 1)

    SlitGeometry() = default;
    explicit SlitGeometry(double rho_);
};

enum class GridMode {
    Diagonal,     // coincidences at equal positions (X, X)
    Antidiagonal, // coincidences at opposite positions (-X, X)
    Full,         // full 2-D detector product grid
};

/// Uniform detector grid. points are strictly increasing and evenly spaced.
struct DetectionGrid {
    std::vector<double> points;
    GridMode mode = GridMode::Diagonal;

    double spacing() const { return points.size() > 1 ? points[1] - points[0] : 0.0; }
};

/// Build a uniform detection grid over [lo, hi] with n points.
DetectionGrid make_detection_grid(double lo, double hi, int n, GridMode mode);

/// sin(z)/z with the removable singularity handled by a series for |z| < 1e-4.
double sinc(double z);

/// Binary slit-plane transmission at position xp (slit widths). The two
/// openings are [c - 1/2, c + 1/2) for c = +-1/(2 rho); intervals are
/// half-open so every point belongs to at most one opening.
double slit_transmission(double xp, const SlitGeometry& geom);

/// Normalized slit spectrum sinc(pi Q) cos(pi Q / rho); equals 1 at Q = 0.
double slit_spectrum(double q, const SlitGeometry& geom);

/// One-photon count rate behind the slits for a coherent beam at normal
/// incidence: intensity * sinc^2(pi X) cos^2(pi X / rho). The fringe
/// period in X is rho and the diffraction envelope vanishes at |X| = 1.
double coherent_g1(double x, const SlitGeometry& geom, double intensity = 1.0);

/// Coincidence rate for the same coherent beam; factorizes into the
/// product of one-photon rates.
double coherent_g2(double x1, double x2, const SlitGeometry& geom, double intensity = 1.0);

} // namespace pdc
