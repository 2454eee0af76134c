#include "pdc/slit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pdc/errors.hpp"

namespace pdc {

SlitGeometry::SlitGeometry(double rho_) : rho(rho_) {
    if (!(rho > 0.0 && rho < 1.0))
        throw ConfigError("slit ratio must lie in (0, 1), got " + std::to_string(rho_));
}

DetectionGrid make_detection_grid(double lo, double hi, int n, GridMode mode) {
    if (n < 2) throw ConfigError("detection grid needs at least 2 points");
    if (!(hi > lo)) throw ConfigError("detection grid needs hi > lo");
    DetectionGrid grid;
    grid.mode = mode;
    grid.points.resize(static_cast<std::size_t>(n));
    const double h = (hi - lo) / (n - 1);
    const double center = 0.5 * (hi + lo);
    const double mid = 0.5 * (n - 1);
    // Centered construction: a grid symmetric about 0 gets exactly
    // mirrored points, points[n-1-i] == -points[i].
    for (int i = 0; i < n; ++i)
        grid.points[static_cast<std::size_t>(i)] = center + (i - mid) * h;
    return grid;
}

double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        const double s = z * z;
        return 1.0 - s / 6.0 * (1.0 - s / 20.0);
    }
    return std::sin(z) / z;
}

double slit_transmission(double xp, const SlitGeometry& geom) {
    const double c = 1.0 / (2.0 * geom.rho);
    const bool upper = xp >= c - 0.5 && xp < c + 0.5;
    const bool lower = xp >= -c - 0.5 && xp < -c + 0.5;
    return (upper || lower) ? 1.0 : 0.0;
}

double slit_spectrum(double q, const SlitGeometry& geom) {
    const double pq = std::numbers::pi * q;
    return sinc(pq) * std::cos(pq / geom.rho);
}

double coherent_g1(double x, const SlitGeometry& geom, double intensity) {
    const double t = slit_spectrum(x, geom);
    return intensity * t * t;
}

double coherent_g2(double x1, double x2, const SlitGeometry& geom, double intensity) {
    return coherent_g1(x1, geom, intensity) * coherent_g1(x2, geom, intensity);
}

} // namespace pdc
